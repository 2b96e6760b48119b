#include "effalg/models.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "effalg/states.hpp"

namespace effalg {

namespace {

struct Gaussian {
  Rational re, im;
};

Gaussian gmul(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
  return {a * c - b * d, a * d + b * c};
}

std::string label_of(const EffectAlgebra& a, ElementId e) { return a.table().label(e); }

}  // namespace

Cyclotomic Cyclotomic::from_triple(const Rational& re, const Rational& im, int omega_power) {
  switch (((omega_power % 3) + 3) % 3) {
    case 0:
      return Cyclotomic(re, im, 0, 0);
    case 1:
      return Cyclotomic(0, 0, re, im);
    default:
      return Cyclotomic(-re, -im, -re, -im);  // w^2 = -1 - w
  }
}

Cyclotomic operator*(const Cyclotomic& x, const Cyclotomic& y) {
  // (a + b w)(c + d w) = (ac - bd) + (ad + bc - bd) w
  const Gaussian ac = gmul(x.ar_, x.ai_, y.ar_, y.ai_);
  const Gaussian bd = gmul(x.br_, x.bi_, y.br_, y.bi_);
  const Gaussian ad = gmul(x.ar_, x.ai_, y.br_, y.bi_);
  const Gaussian bc = gmul(x.br_, x.bi_, y.ar_, y.ai_);
  return Cyclotomic(ac.re - bd.re, ac.im - bd.im, ad.re + bc.re - bd.re, ad.im + bc.im - bd.im);
}

bool operator<(const Cyclotomic& x, const Cyclotomic& y) {
  return std::tie(x.ar_, x.ai_, x.br_, x.bi_) < std::tie(y.ar_, y.ai_, y.br_, y.bi_);
}

std::complex<double> Cyclotomic::to_complex() const {
  const std::complex<double> w(-0.5, std::sqrt(3.0) / 2);
  const std::complex<double> a(ar_.get_d(), ai_.get_d());
  const std::complex<double> b(br_.get_d(), bi_.get_d());
  return a + b * w;
}

std::string Cyclotomic::to_string() const {
  std::ostringstream os;
  os << "(" << effalg::to_string(ar_) << " + " << effalg::to_string(ai_) << "i) + (" << effalg::to_string(br_)
     << " + " << effalg::to_string(bi_) << "i)w";
  return os.str();
}

VerificationResult VerificationResult::failure(std::string reason, std::vector<ElementId> witness) {
  return VerificationResult{false, std::move(reason), std::move(witness)};
}

VerificationResult verify_multiplicative(const EffectAlgebra& algebra, const MultiplicativeModel& model) {
  const int n = algebra.order();
  if (model.assignment.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("multiplicative model assigns " + std::to_string(model.assignment.size()) +
                                " elements, algebra has " + std::to_string(n));
  const std::size_t dim = model.assignment.front().size();
  if (dim == 0) throw std::invalid_argument("multiplicative model has empty vectors");
  for (const auto& v : model.assignment)
    if (v.size() != dim) throw std::invalid_argument("multiplicative model vectors differ in length");

  std::map<CyclotomicVector, ElementId> image;
  for (ElementId e = 0; e < n; ++e) {
    const auto [it, fresh] = image.emplace(model.assignment[static_cast<std::size_t>(e)], e);
    if (!fresh)
      return VerificationResult::failure(
          "not injective: " + label_of(algebra, it->second) + " and " + label_of(algebra, e) + " share a value",
          {it->second, e});
  }
  for (ElementId a = 0; a < n; ++a)
    for (ElementId b = 0; b < n; ++b) {
      CyclotomicVector prod(dim);
      for (std::size_t k = 0; k < dim; ++k)
        prod[k] = model.assignment[static_cast<std::size_t>(a)][k] * model.assignment[static_cast<std::size_t>(b)][k];
      const auto it = image.find(prod);
      const auto s = algebra.sum(a, b);
      const std::string pair = label_of(algebra, a) + " + " + label_of(algebra, b);
      if (s && it == image.end())
        return VerificationResult::failure(pair + " is defined but the product is not in the model", {a, b});
      if (!s && it != image.end())
        return VerificationResult::failure(pair + " is undefined but the product is the image of " +
                                               label_of(algebra, it->second),
                                           {a, b});
      if (s && it->second != *s)
        return VerificationResult::failure(pair + " = " + label_of(algebra, *s) + " but the product is the image of " +
                                               label_of(algebra, it->second),
                                           {a, b});
    }
  return {};
}

VerificationResult verify_fuzzy(const EffectAlgebra& algebra, const FuzzyAssignment& fuzzy, bool weak) {
  const int n = algebra.order();
  if (fuzzy.assignment.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("fuzzy assignment covers " + std::to_string(fuzzy.assignment.size()) +
                                " elements, algebra has " + std::to_string(n));
  const std::size_t dim = fuzzy.assignment.front().size();
  if (dim == 0) throw std::invalid_argument("fuzzy assignment has empty vectors");
  for (const auto& v : fuzzy.assignment)
    if (v.size() != dim) throw std::invalid_argument("fuzzy assignment vectors differ in length");

  const auto& f = fuzzy.assignment;
  if (std::any_of(f[kZero].begin(), f[kZero].end(), [](const Rational& x) { return x != 0; }))
    return VerificationResult::failure("the zero effect must map to the zero vector", {kZero});
  if (std::any_of(f[kOne].begin(), f[kOne].end(), [](const Rational& x) { return x != 1; }))
    return VerificationResult::failure("the unit must map to the all-ones vector", {kOne});
  std::map<RationalVector, ElementId> image;
  for (ElementId e = 0; e < n; ++e) {
    const auto& v = f[static_cast<std::size_t>(e)];
    if (std::any_of(v.begin(), v.end(), [](const Rational& x) { return x < 0 || x > 1; }))
      return VerificationResult::failure("value of " + label_of(algebra, e) + " leaves [0,1]", {e});
    const auto [it, fresh] = image.emplace(v, e);
    if (!fresh)
      return VerificationResult::failure(
          "not injective: " + label_of(algebra, it->second) + " and " + label_of(algebra, e) + " share a value",
          {it->second, e});
  }

  for (ElementId a = 0; a < n; ++a)
    for (ElementId b = 0; b < n; ++b) {
      RationalVector sum(dim);
      bool fits = true;
      for (std::size_t k = 0; k < dim; ++k) {
        sum[k] = f[static_cast<std::size_t>(a)][k] + f[static_cast<std::size_t>(b)][k];
        fits = fits && sum[k] <= 1;
      }
      const auto s = algebra.sum(a, b);
      const std::string pair = label_of(algebra, a) + " + " + label_of(algebra, b);
      if (s) {
        if (!fits) return VerificationResult::failure(pair + " is defined but the vector sum exceeds 1", {a, b});
        if (sum != f[static_cast<std::size_t>(*s)])
          return VerificationResult::failure(pair + " = " + label_of(algebra, *s) +
                                                 " but the vector sum is not its image",
                                             {a, b});
      } else if (fits && !weak) {
        return VerificationResult::failure(pair + " is undefined but the vector sum stays within [0,1]", {a, b});
      }
    }
  return {};
}

VerificationResult verify_embedding(const EffectAlgebra& sub, const EffectAlgebra& ambient,
                                    const std::vector<ElementId>& map, bool weak) {
  const int n = sub.order();
  if (map.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("embedding map has the wrong length");
  for (ElementId x : map)
    if (x < 0 || x >= ambient.order()) throw std::invalid_argument("embedding map leaves the ambient algebra");
  if (map[kZero] != kZero) return VerificationResult::failure("the zero effect is not preserved", {kZero});
  if (map[kOne] != kOne) return VerificationResult::failure("the unit is not preserved", {kOne});
  std::set<ElementId> seen;
  for (ElementId e = 0; e < n; ++e)
    if (!seen.insert(map[static_cast<std::size_t>(e)]).second)
      return VerificationResult::failure("not injective at " + label_of(sub, e), {e});

  for (ElementId a = 0; a < n; ++a)
    for (ElementId b = 0; b < n; ++b) {
      const auto s = sub.sum(a, b);
      const auto t = ambient.sum(map[static_cast<std::size_t>(a)], map[static_cast<std::size_t>(b)]);
      const std::string pair = label_of(sub, a) + " + " + label_of(sub, b);
      if (s && (!t || *t != map[static_cast<std::size_t>(*s)]))
        return VerificationResult::failure(pair + " is not preserved", {a, b});
      if (!s && t && !weak)
        return VerificationResult::failure(pair + " is defined in the ambient algebra only", {a, b});
    }
  return {};
}

namespace {

// Smallest set (then lexicographically least) of more than m nontrivial effects that
// sum to 1 and all have e + e undefined.
std::vector<ElementId> pigeonhole_set(const EffectAlgebra& algebra, int m) {
  std::vector<ElementId> pool;
  for (ElementId e = 2; e < algebra.order(); ++e)
    if (!algebra.defined(e, e)) pool.push_back(e);
  const std::size_t p = pool.size();
  for (std::size_t r = static_cast<std::size_t>(m) + 1; r <= p; ++r) {
    std::vector<std::size_t> idx(r);
    for (std::size_t i = 0; i < r; ++i) idx[i] = i;
    while (true) {
      std::optional<ElementId> acc = kZero;
      for (std::size_t i = 0; i < r && acc; ++i) acc = algebra.sum(*acc, pool[idx[i]]);
      if (acc && *acc == kOne) {
        std::vector<ElementId> out;
        for (std::size_t i : idx) out.push_back(pool[i]);
        return out;
      }
      std::size_t i = r;
      while (i > 0 && idx[i - 1] == p - r + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return {};
}

using Mask = std::vector<std::uint64_t>;

bool covers(const Mask& a, std::size_t bit) { return (a[bit / 64] >> (bit % 64)) & 1U; }

bool subset_of(const Mask& a, const Mask& b) {
  for (std::size_t w = 0; w < a.size(); ++w)
    if ((a[w] & ~b[w]) != 0) return false;
  return true;
}

}  // namespace

DimensionBoundResult fuzzy_dimension_search(const EffectAlgebra& algebra, int m, int max_denominator) {
  if (m < 1 || m > 3) throw std::invalid_argument("fuzzy dimension search supports 1 <= m <= 3, got " + std::to_string(m));
  if (max_denominator < 1) throw std::invalid_argument("max_denominator must be positive");
  DimensionBoundResult out;
  out.max_denominator = max_denominator;

  out.pigeonhole_set = pigeonhole_set(algebra, m);
  if (!out.pigeonhole_set.empty()) {
    out.analytic = true;
    return out;
  }

  // The coordinates of a strict fuzzy assignment are states, and m states give one exactly
  // when they are order-determining. Cover every pair e not <= f by a state with
  // sigma(e) > sigma(f).
  const int n = algebra.order();
  std::vector<std::pair<ElementId, ElementId>> pairs;
  for (ElementId e = 0; e < n; ++e)
    for (ElementId f = 0; f < n; ++f)
      if (!algebra.leq(e, f)) pairs.emplace_back(e, f);

  const auto states = grid_states(algebra, max_denominator);
  const std::size_t words = (pairs.size() + 63) / 64;
  std::map<Mask, std::size_t> by_mask;  // first state with each coverage pattern
  for (std::size_t s = 0; s < states.size(); ++s) {
    Mask mask(words, 0);
    for (std::size_t p = 0; p < pairs.size(); ++p)
      if (states[s][pairs[p].first] > states[s][pairs[p].second]) mask[p / 64] |= std::uint64_t{1} << (p % 64);
    by_mask.emplace(std::move(mask), s);
  }
  // Drop patterns dominated by another one.
  std::vector<std::pair<Mask, std::size_t>> candidates;
  for (const auto& [mask, s] : by_mask) {
    bool dominated = false;
    for (const auto& [other, t] : by_mask)
      if (other != mask && subset_of(mask, other)) {
        dominated = true;
        break;
      }
    if (!dominated) candidates.emplace_back(mask, s);
  }

  std::vector<std::size_t> chosen;
  std::function<bool(const Mask&)> search = [&](const Mask& covered) -> bool {
    std::size_t open = pairs.size();
    for (std::size_t p = 0; p < pairs.size(); ++p)
      if (!covers(covered, p)) {
        open = p;
        break;
      }
    if (open == pairs.size()) {
      // Pad to exactly m coordinates by repeating the last state.
      std::vector<std::size_t> cols = chosen;
      while (cols.size() < static_cast<std::size_t>(m)) cols.push_back(cols.empty() ? 0 : cols.back());
      FuzzyAssignment fa;
      for (ElementId e = 0; e < n; ++e) {
        RationalVector v;
        for (std::size_t c : cols) v.push_back(states[c][e]);
        fa.assignment.push_back(std::move(v));
      }
      if (!verify_fuzzy(algebra, fa, false)) return false;
      out.witness = std::move(fa);
      return true;
    }
    if (chosen.size() == static_cast<std::size_t>(m)) return false;
    for (const auto& [mask, s] : candidates) {
      if (!covers(mask, open)) continue;
      Mask next = covered;
      for (std::size_t w = 0; w < words; ++w) next[w] |= mask[w];
      chosen.push_back(s);
      if (search(next)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (!states.empty()) out.exists = search(Mask(words, 0));
  return out;
}

bool verify_fuzzy_dimension_bound(const EffectAlgebra& algebra, int m, int max_denominator) {
  return fuzzy_dimension_search(algebra, m, max_denominator).exists;
}

VerificationResult verify_quantum_matrices(const EffectAlgebra& algebra, const std::vector<ComplexMatrix>& assignment,
                                           double tol) {
  if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");
  const int n = algebra.order();
  if (assignment.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("matrix model assigns " + std::to_string(assignment.size()) + " elements, algebra has " +
                                std::to_string(n));
  const std::size_t d = assignment.front().size();
  if (d == 0) throw std::invalid_argument("matrix model has empty matrices");

  std::vector<Eigen::MatrixXcd> mats;
  for (ElementId e = 0; e < n; ++e) {
    const auto& rows = assignment[static_cast<std::size_t>(e)];
    if (rows.size() != d) throw std::invalid_argument("matrix for " + label_of(algebra, e) + " has the wrong size");
    Eigen::MatrixXcd m(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
    for (std::size_t r = 0; r < d; ++r) {
      if (rows[r].size() != d) throw std::invalid_argument("matrix for " + label_of(algebra, e) + " is not square");
      for (std::size_t c = 0; c < d; ++c) m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = rows[r][c];
    }
    if ((m - m.adjoint()).cwiseAbs().maxCoeff() > tol)
      throw std::invalid_argument("matrix for " + label_of(algebra, e) + " is not Hermitian");
    mats.push_back(std::move(m));
  }

  auto spectrum = [](const Eigen::MatrixXcd& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
    return std::make_pair(solver.eigenvalues().minCoeff(), solver.eigenvalues().maxCoeff());
  };
  auto close = [tol](const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    return (a - b).cwiseAbs().maxCoeff() <= tol;
  };

  for (ElementId e = 0; e < n; ++e) {
    const auto [lo, hi] = spectrum(mats[static_cast<std::size_t>(e)]);
    if (lo < -tol || hi > 1 + tol)
      return VerificationResult::failure("matrix for " + label_of(algebra, e) + " is not between 0 and I", {e});
    for (ElementId f = 0; f < e; ++f)
      if (close(mats[static_cast<std::size_t>(e)], mats[static_cast<std::size_t>(f)]))
        return VerificationResult::failure(
            "not injective: " + label_of(algebra, f) + " and " + label_of(algebra, e) + " share a matrix", {f, e});
  }
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  if (!close(mats[kZero], Eigen::MatrixXcd::Zero(id.rows(), id.cols())))
    return VerificationResult::failure("the zero effect must map to the zero matrix", {kZero});
  if (!close(mats[kOne], id)) return VerificationResult::failure("the unit must map to the identity", {kOne});

  for (ElementId a = 0; a < n; ++a)
    for (ElementId b = 0; b < n; ++b) {
      const Eigen::MatrixXcd sum = mats[static_cast<std::size_t>(a)] + mats[static_cast<std::size_t>(b)];
      const bool fits = spectrum(sum).second <= 1 + tol;
      const auto s = algebra.sum(a, b);
      const std::string pair = label_of(algebra, a) + " + " + label_of(algebra, b);
      if (s) {
        if (!fits) return VerificationResult::failure(pair + " is defined but the matrix sum exceeds I", {a, b});
        if (!close(sum, mats[static_cast<std::size_t>(*s)]))
          return VerificationResult::failure(pair + " = " + label_of(algebra, *s) +
                                                 " but the matrix sum differs from its image",
                                             {a, b});
      } else if (fits) {
        return VerificationResult::failure(pair + " is undefined but the matrix sum stays below I", {a, b});
      }
    }
  return {};
}

}  // namespace effalg
