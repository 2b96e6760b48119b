#include "doctest.h"
#include "effalg/catalog.hpp"
#include "effalg/models.hpp"
#include "support.hpp"

using namespace effalg;

namespace {

MultiplicativeModel scalars(std::initializer_list<int> xs) {
  MultiplicativeModel m;
  for (int x : xs) m.assignment.push_back({Cyclotomic(x)});
  return m;
}

std::vector<RationalVector> points(std::initializer_list<RationalVector> xs) { return {xs}; }

}  // namespace

TEST_CASE("cyclotomic arithmetic") {
  const auto w = Cyclotomic::omega();
  const Cyclotomic one(1);
  const Cyclotomic i(0, 1);
  CHECK(w * w * w == one);
  CHECK(i * i == Cyclotomic(-1));
  CHECK(Cyclotomic::from_triple(2, 0, 4) == Cyclotomic(2) * w);
  CHECK(Cyclotomic::from_triple(0, 3, 2) == Cyclotomic(0, 3) * w * w);
  CHECK(Cyclotomic::from_triple(1, 0, -1) == w * w);
  CHECK_FALSE(w == one);
  CHECK(std::abs(w.to_complex() - std::complex<double>(-0.5, std::sqrt(3.0) / 2)) < 1e-12);
  CHECK((w < one) != (one < w));
}

TEST_CASE("multiplicative models") {
  // S3 inside the reals: 0 -> 1, e -> 2, 1 -> 4.
  const auto& s3 = testing::named("S3");
  CHECK(verify_multiplicative(s3, scalars({1, 4, 2})));
  const auto bad = verify_multiplicative(s3, scalars({1, 4, 3}));
  CHECK_FALSE(bad);
  CHECK_FALSE(bad.reason.empty());
  CHECK_FALSE(verify_multiplicative(s3, scalars({1, 4, 4})));
  CHECK_THROWS_AS(verify_multiplicative(s3, scalars({1, 4})), std::invalid_argument);
  CHECK_THROWS_AS(verify_multiplicative(s3, {{{Cyclotomic(1)}, {Cyclotomic(4), Cyclotomic(4)}, {Cyclotomic(2)}}}), std::invalid_argument);
}

TEST_CASE("sparse vector models for several shapes") {
  for (int k = 0; k <= 3; ++k)
    for (int l = 0; l <= 2; ++l) {
      if (k + l == 0) continue;
      CAPTURE(k);
      CAPTURE(l);
      const auto a = make_sparse(k, l);
      const std::size_t dim = static_cast<std::size_t>(k + l);
      MultiplicativeModel m;
      m.assignment.assign(static_cast<std::size_t>(a.order()), CyclotomicVector(dim, Cyclotomic(2)));
      m.assignment[kZero] = CyclotomicVector(dim, Cyclotomic(1));
      m.assignment[kOne] = CyclotomicVector(dim, Cyclotomic(4));
      for (int j = 0; j < k; ++j) m.assignment[static_cast<std::size_t>(2 + j)][static_cast<std::size_t>(j)] = Cyclotomic(-2);
      for (int j = 0; j < l; ++j) {
        const auto e = static_cast<std::size_t>(2 + k + 2 * j);
        m.assignment[e][static_cast<std::size_t>(k + j)] = Cyclotomic(0, -2);
        m.assignment[e + 1][static_cast<std::size_t>(k + j)] = Cyclotomic(0, 2);
      }
      CHECK(verify_multiplicative(a, m));
    }
}

TEST_CASE("strict and weak fuzzy models") {
  const auto& e53 = testing::named("E5(3)");
  const FuzzyAssignment weak{points({{0}, {1}, {Rational(1, 3)}, {Rational(1, 2)}, {Rational(2, 3)}})};
  CHECK(verify_fuzzy(e53, weak, true));
  CHECK_FALSE(verify_fuzzy(e53, weak, false));

  const auto& p4 = testing::named("P4");
  CHECK(verify_fuzzy(p4, {points({{0, 0}, {1, 1}, {1, 0}, {0, 1}})}));
  CHECK_FALSE(verify_fuzzy(p4, {points({{0, 0}, {1, 1}, {1, 0}, {1, 0}})}));
  CHECK_FALSE(verify_fuzzy(p4, {points({{0, 0}, {1, 1}, {Rational(3, 2), 0}, {0, 1}})}));
  CHECK_FALSE(verify_fuzzy(p4, {points({{0, 0}, {1, 1}, {Rational(1, 2), 0}, {Rational(1, 2), 1}})}));
  CHECK_THROWS_AS(verify_fuzzy(p4, {points({{0, 0}, {1, 1}, {1, 0}})}), std::invalid_argument);
}

TEST_CASE("fuzzy dimension search") {
  const auto& e8 = testing::named("E8");
  const auto two = fuzzy_dimension_search(e8, 2);
  CHECK_FALSE(two.exists);
  CHECK(two.analytic);
  CHECK(two.pigeonhole_set.size() == 3);
  const auto three = fuzzy_dimension_search(e8, 3);
  CHECK(three.exists);
  REQUIRE(three.witness);
  CHECK(verify_fuzzy(e8, *three.witness));

  const auto p6 = fuzzy_dimension_search(testing::named("P6"), 2);
  CHECK(p6.exists);
  CHECK(verify_fuzzy(testing::named("P6"), *p6.witness));
  CHECK(verify_fuzzy_dimension_bound(testing::named("S5"), 1));
  CHECK_FALSE(verify_fuzzy_dimension_bound(testing::named("P4"), 1));
  CHECK_THROWS_AS(fuzzy_dimension_search(e8, 0), std::invalid_argument);
  CHECK_THROWS_AS(fuzzy_dimension_search(e8, 4), std::invalid_argument);
}

TEST_CASE("matrix models") {
  const auto& s3 = testing::named("S3");
  using C = std::complex<double>;
  const ComplexMatrix zero{{0, 0}, {0, 0}};
  const ComplexMatrix id{{1, 0}, {0, 1}};
  CHECK(verify_quantum_matrices(s3, {zero, id, {{0.5, 0}, {0, 0.5}}}));
  CHECK_FALSE(verify_quantum_matrices(s3, {zero, id, {{0.5, 0}, {0, 0.25}}}));
  CHECK_THROWS_AS(verify_quantum_matrices(s3, {zero, id, {{0.5, C(0, 1)}, {C(0, 1), 0.5}}}), std::invalid_argument);
  CHECK_THROWS_AS(verify_quantum_matrices(s3, {zero, id}), std::invalid_argument);
  CHECK_THROWS_AS(verify_quantum_matrices(s3, {zero, id, {{0.5}}}), std::invalid_argument);
  CHECK_THROWS_AS(verify_quantum_matrices(s3, {zero, id, {{0.5, 0}, {0, 0.5}}}, 0.0), std::invalid_argument);
}

TEST_CASE("embeddings") {
  // S3 sits inside S5 as {0, 1/2, 1}.
  const auto& s3 = testing::named("S3");
  const auto& s5 = testing::named("S5");
  CHECK(verify_embedding(s3, s5, {kZero, kOne, 3}));
  CHECK_FALSE(verify_embedding(s3, s5, {kZero, kOne, 2}));
  // E5(3) as {0, 1/3, 1/2, 2/3, 1} inside the sixths: 1/3 + 1/2 exists only in the ambient.
  const auto s7 = make_scale(7);
  const std::vector<ElementId> map{kZero, kOne, 3, 4, 5};
  CHECK(verify_embedding(testing::named("E5(3)"), s7, map, true));
  CHECK_FALSE(verify_embedding(testing::named("E5(3)"), s7, map, false));
  CHECK_FALSE(verify_embedding(testing::named("D4"), s5, {kZero, kOne, 3, 3}));
}
