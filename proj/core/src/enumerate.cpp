#include "effalg/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

#include "effalg/canonical.hpp"

namespace effalg {

EnumerationStats& EnumerationStats::operator+=(const EnumerationStats& o) {
  nodes += o.nodes;
  pruned_unit += o.pruned_unit;
  pruned_self += o.pruned_self;
  pruned_et5 += o.pruned_et5;
  pruned_et6 += o.pruned_et6;
  pruned_et7 += o.pruned_et7;
  pruned_full_row += o.pruned_full_row;
  pruned_associativity += o.pruned_associativity;
  pruned_noncanonical += o.pruned_noncanonical;
  rejected_by_validate += o.rejected_by_validate;
  raw_tables += o.raw_tables;
  return *this;
}

namespace {

// Grid codes: 0 undefined, 1 unit, k >= 2 the element k, kUnknown not yet assigned.
// Rows and columns are indexed by nontrivial position (element id - 2).
constexpr std::uint8_t kUnknown = 254;
constexpr std::uint8_t kUndef = 0;
constexpr std::uint8_t kUnit = 1;

struct Prefix {
  std::vector<std::uint8_t> grid;
  std::vector<int> units;
};

class Search {
 public:
  Search(int n, bool orderly, bool keep_tables)
      : n_(n), m_(n - 2), orderly_(orderly), keep_(keep_tables),
        grid_(static_cast<std::size_t>(m_ * m_), kUnknown), units_(static_cast<std::size_t>(m_), 0) {
    for (int a = 0; a < m_; ++a)
      for (int b = a; b < m_; ++b) positions_.emplace_back(a, b);
    src_.resize(static_cast<std::size_t>(m_));
    perm_.resize(static_cast<std::size_t>(m_));
  }

  // Explores the subtree below `from`; with stop_at set, records partial grids there instead.
  void run(std::size_t from, std::size_t stop_at) {
    stop_at_ = stop_at;
    dfs(from);
  }

  void load(const Prefix& p) {
    grid_ = p.grid;
    units_ = p.units;
  }

  std::vector<Prefix>& prefixes() { return prefixes_; }
  std::vector<SumTable>& tables() { return tables_; }
  std::size_t found() const { return found_; }
  const EnumerationStats& stats() const { return stats_; }

 private:
  std::uint8_t& at(int a, int b) { return grid_[static_cast<std::size_t>(a * m_ + b)]; }
  std::uint8_t get(int a, int b) const { return grid_[static_cast<std::size_t>(a * m_ + b)]; }
  bool known_defined(std::uint8_t v) const { return v != kUnknown && v != kUndef; }

  void dfs(std::size_t k) {
    if (k == stop_at_) {
      prefixes_.push_back({grid_, units_});
      return;
    }
    if (k == positions_.size()) {
      leaf();
      return;
    }
    const auto [i, j] = positions_[k];
    for (int v = 0; v < n_; ++v) {
      ++stats_.nodes;
      const auto code = static_cast<std::uint8_t>(v);
      if (v >= 2 && (v - 2 == i || v - 2 == j)) {
        ++stats_.pruned_self;
        continue;
      }
      if (v == kUnit && (units_[i] > 0 || units_[j] > 0)) {
        ++stats_.pruned_unit;
        continue;
      }
      at(i, j) = code;
      at(j, i) = code;
      if (v == kUnit) {
        ++units_[i];
        if (j != i) ++units_[j];
      }
      if (admissible(i, j, code, k)) dfs(k + 1);
      if (v == kUnit) {
        --units_[i];
        if (j != i) --units_[j];
      }
      at(i, j) = kUnknown;
      at(j, i) = kUnknown;
    }
  }

  bool admissible(int i, int j, std::uint8_t v, std::size_t k) {
    if (!rule_et5(i, j, v)) return ++stats_.pruned_et5, false;
    if (!rule_et6(i, j, v)) return ++stats_.pruned_et6, false;
    if (!rule_et7(i, j, v)) return ++stats_.pruned_et7, false;
    if (!associative_around(i, j)) return ++stats_.pruned_associativity, false;
    if (j == m_ - 1) {
      // Row i is now complete.
      if (units_[i] != 1) return ++stats_.pruned_unit, false;
      if (row_full(i))
        for (int r = 0; r < i; ++r)
          if (row_full(r)) return ++stats_.pruned_full_row, false;
      if (orderly_ && has_smaller_relabeling(k + 1)) return ++stats_.pruned_noncanonical, false;
    }
    return true;
  }

  // Two self-complementary effects never have a defined sum.
  bool rule_et5(int i, int j, std::uint8_t v) const {
    if (i == j && v == kUnit) {
      for (int b = 0; b < m_; ++b)
        if (b != i && get(b, b) == kUnit && known_defined(get(i, b))) return false;
    } else if (i != j && known_defined(v)) {
      if (get(i, i) == kUnit && get(j, j) == kUnit) return false;
    }
    return true;
  }

  // If e + e is defined and e is not self-complementary, e' + e' is undefined.
  bool rule_et6(int i, int j, std::uint8_t v) const {
    if (i != j && v == kUnit) return !(known_defined(get(i, i)) && known_defined(get(j, j)));
    if (i == j && known_defined(v))
      for (int c = 0; c < m_; ++c)
        if (c != i && get(i, c) == kUnit && known_defined(get(c, c))) return false;
    return true;
  }

  // If f = e + e and f + f is defined, e + f is defined.
  bool rule_et7(int i, int j, std::uint8_t v) const {
    if (i == j) {
      if (v >= 2) {
        const int b = v - 2;
        if (known_defined(get(b, b)) && get(i, b) == kUndef) return false;
      }
      if (known_defined(v))
        for (int a = 0; a < m_; ++a)
          if (get(a, a) == i + 2 && get(a, i) == kUndef) return false;
    } else if (v == kUndef) {
      if (get(i, i) == j + 2 && known_defined(get(j, j))) return false;
      if (get(j, j) == i + 2 && known_defined(get(i, i))) return false;
    }
    return true;
  }

  // Value of (x + c) where x is a grid code and c a nontrivial position; kUnknown if not
  // yet determined.
  std::uint8_t add(std::uint8_t x, int c) const {
    if (x == kUnknown) return kUnknown;
    if (x == kUndef || x == kUnit) return kUndef;
    return get(x - 2, c);
  }

  bool triple_ok(int a, int b, int c) const {
    const std::uint8_t lhs = add(get(a, b), c);
    if (lhs == kUnknown) return true;
    const std::uint8_t bc = get(b, c);
    if (bc == kUnknown) return true;
    const std::uint8_t rhs = add(bc, a);
    if (rhs == kUnknown) return true;
    return lhs == rhs;
  }

  // Every nontrivial triple whose evaluation reads cell (i, j).
  bool associative_around(int i, int j) const {
    for (int c = 0; c < m_; ++c)
      if (!triple_ok(i, j, c) || !triple_ok(j, i, c) || !triple_ok(c, i, j) || !triple_ok(c, j, i)) return false;
    for (int a = 0; a < m_; ++a)
      for (int b = 0; b < m_; ++b) {
        const std::uint8_t x = get(a, b);
        if (x == i + 2 && (!triple_ok(a, b, j) || !triple_ok(j, a, b))) return false;
        if (x == j + 2 && (!triple_ok(a, b, i) || !triple_ok(i, a, b))) return false;
      }
    return true;
  }

  bool row_full(int r) const {
    for (int c = 0; c < m_; ++c)
      if (get(r, c) == kUndef) return false;
    return true;
  }

  // True if some relabeling makes the first `filled` cells strictly smaller.
  bool has_smaller_relabeling(std::size_t filled) {
    std::iota(src_.begin(), src_.end(), 0);
    while (std::next_permutation(src_.begin(), src_.end())) {
      for (int x = 0; x < m_; ++x) perm_[src_[x]] = x;
      for (std::size_t k = 0; k < filled; ++k) {
        const auto [a, b] = positions_[k];
        std::uint8_t pv = get(src_[a], src_[b]);
        if (pv == kUnknown) break;
        if (pv >= 2) pv = static_cast<std::uint8_t>(perm_[pv - 2] + 2);
        const std::uint8_t tv = get(a, b);
        if (pv < tv) return true;
        if (pv > tv) break;
      }
    }
    return false;
  }

  void leaf() {
    SumTable table(n_);
    for (int a = 0; a < m_; ++a)
      for (int b = 0; b < m_; ++b) {
        const std::uint8_t v = get(a, b);
        table.set(a + 2, b + 2, v == kUndef ? CellValue::undefined()
                                : v == kUnit ? CellValue::one()
                                             : CellValue::effect(v));
      }
    if (!validate(table).ok()) {
      ++stats_.rejected_by_validate;
      return;
    }
    ++stats_.raw_tables;
    ++found_;
    if (keep_) tables_.push_back(std::move(table));
  }

  int n_, m_;
  bool orderly_, keep_;
  std::vector<std::uint8_t> grid_;
  std::vector<int> units_;
  std::vector<std::pair<int, int>> positions_;
  std::vector<int> src_, perm_;
  std::size_t stop_at_ = static_cast<std::size_t>(-1);
  std::vector<Prefix> prefixes_;
  std::vector<SumTable> tables_;
  std::size_t found_ = 0;
  EnumerationStats stats_;
};

}  // namespace

EnumerationResult enumerate(int n, const EnumerationOptions& options) {
  if (n < 2) throw std::invalid_argument("enumerate needs n >= 2, got " + std::to_string(n));
  EnumerationResult result;
  result.n = n;
  const int m = n - 2;
  // Without the orderly filter every labeling is kept so it can be deduplicated below.
  const bool keep = !options.count_only || !options.orderly;

  std::vector<SumTable> tables;
  if (m == 0) {
    tables.emplace_back(2);
    result.stats.raw_tables = 1;
    result.count = 1;
  } else {
    // Split on the assignments of the first row.
    Search root(n, options.orderly, keep);
    root.run(0, static_cast<std::size_t>(m));
    result.stats += root.stats();
    std::vector<Prefix> prefixes = std::move(root.prefixes());

    const unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(prefixes.size())));
    std::vector<Search> workers;
    workers.reserve(jobs);
    for (unsigned w = 0; w < jobs; ++w) workers.emplace_back(n, options.orderly, keep);
    std::atomic<std::size_t> next{0};
    auto work = [&](Search& s) {
      for (std::size_t p; (p = next.fetch_add(1)) < prefixes.size();) {
        s.load(prefixes[p]);
        s.run(static_cast<std::size_t>(m), static_cast<std::size_t>(-1));
      }
    };
    if (jobs == 1) {
      work(workers[0]);
    } else {
      std::vector<std::thread> threads;
      for (auto& s : workers) threads.emplace_back(work, std::ref(s));
      for (auto& t : threads) t.join();
    }
    for (auto& s : workers) {
      result.stats += s.stats();
      result.count += s.found();
      for (auto& t : s.tables()) tables.push_back(std::move(t));
    }
  }

  if (!options.orderly) {
    for (auto& t : tables) t = canonical_form(t).table;
    std::sort(tables.begin(), tables.end());
    tables.erase(std::unique(tables.begin(), tables.end()), tables.end());
    result.count = tables.size();
  } else {
    std::sort(tables.begin(), tables.end());
  }

  if (!options.count_only) {
    result.algebras.reserve(tables.size());
    for (const auto& t : tables) result.algebras.push_back(EffectAlgebra::from_table(t));
  }
  return result;
}

}  // namespace effalg
