// Acceptance checks, one PASS/FAIL line per criterion. Exit status is the number of failures.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "cli.hpp"
#include "effalg/canonical.hpp"
#include "effalg/catalog.hpp"
#include "effalg/classify.hpp"
#include "effalg/compose.hpp"
#include "effalg/enumerate.hpp"
#include "effalg/io.hpp"
#include "effalg/models.hpp"
#include "effalg/states.hpp"
#include "json.hpp"
#include "support.hpp"

using namespace effalg;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// Collects failures for one criterion.
struct Check {
  std::vector<std::string> failures;
  std::ostringstream note;

  void require(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

const std::vector<EffectAlgebra>& all_of_order(int n) {
  static std::map<int, std::vector<EffectAlgebra>> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, enumerate(n).algebras).first;
  return it->second;
}

SumTable canon(const EffectAlgebra& a) { return canonical_form(a.table()).table; }

State with_trivial(std::initializer_list<Rational> values) {
  State s{0, 1};
  s.insert(s.end(), values.begin(), values.end());
  return s;
}

void criterion1(Check& c) {
  const std::size_t expected[] = {1, 1, 3, 4, 10};
  for (int n = 2; n <= 6; ++n) {
    std::ostringstream out, err;
    const auto t0 = Clock::now();
    const int code = cli::run({"enumerate", "-n", std::to_string(n), "--count-only"}, out, err);
    const double s = seconds_since(t0);
    c.require(code == 0 && out.str() == std::to_string(expected[n - 2]) + "\n",
              "n=" + std::to_string(n) + " printed '" + out.str() + "'");
    c.require(s < 5.0, "n=" + std::to_string(n) + " took " + std::to_string(s) + "s");
  }
  for (int n : {7, 8}) {
    const auto t0 = Clock::now();
    const auto& algebras = all_of_order(n);
    const double s = seconds_since(t0);
    const auto t1 = Clock::now();
    const auto naive = oracle::naive_enumerate(n);
    const double s_naive = seconds_since(t1);
    std::set<oracle::Key> ours;
    for (const auto& a : algebras) ours.insert(oracle::canonical_key(testing::to_oracle(a.table())));
    c.require(ours.size() == algebras.size(), "n=" + std::to_string(n) + " has isomorphic duplicates");
    c.require(ours == naive.classes, "n=" + std::to_string(n) + " differs from the naive enumerator");
    c.require(s < 600.0, "n=" + std::to_string(n) + " took " + std::to_string(s) + "s");
    c.note << " n=" << n << ": " << algebras.size() << " (" << s << "s; naive " << naive.classes.size() << ", "
           << s_naive << "s)";
  }
}

void criterion2(Check& c) {
  const std::set<std::string> quantum{"S2", "S3", "S4", "P4", "S5", "E5(1,1)", "S6", "E6(7)", "P6", "E6(4)"};
  const std::set<std::string> non_quantum{"D4",      "D5",      "E5(3)",   "D6",      "E6(2,1)",
                                          "E6(5)",   "E6(6)",   "E6(8)",   "E6(9)"};
  std::map<SumTable, std::string> names;
  for (const auto& name : quantum) names[canon(testing::named(name))] = name;
  for (const auto& name : non_quantum) names[canon(testing::named(name))] = name;
  std::set<std::string> seen_quantum, seen_other;
  std::size_t total = 0;
  for (int n = 2; n <= 6; ++n)
    for (const auto& a : all_of_order(n)) {
      ++total;
      const auto it = names.find(a.table());
      if (it == names.end()) {
        c.require(false, "unnamed algebra of order " + std::to_string(n));
        continue;
      }
      (is_quantum(a) ? seen_quantum : seen_other).insert(it->second);
    }
  c.require(total == quantum.size() + non_quantum.size(), "expected 19 algebras, got " + std::to_string(total));
  c.require(seen_quantum == quantum, "quantum side differs");
  c.require(seen_other == non_quantum, "non-quantum side differs");
}

void criterion3(Check& c) {
  for (int n = 2; n <= 8; ++n) {
    const int lo = n - 2;
    const int hi = (n - 1) * (n - 2) / 2;
    int at_max = 0;
    int at_min = 0;
    bool max_is_scale = true;
    for (const auto& a : all_of_order(n)) {
      const auto k = classify(a);
      c.require(lo <= k.defined_count && k.defined_count <= hi,
                "n=" + std::to_string(n) + " defined count " + std::to_string(k.defined_count));
      if (k.defined_count == hi) {
        ++at_max;
        max_is_scale = max_is_scale && k.is_scale;
      }
      if (k.defined_count == lo) ++at_min;
    }
    c.require(at_max == 1 && max_is_scale, "n=" + std::to_string(n) + " maximum not a unique scale");
    c.require(at_min == sparse_count(n), "n=" + std::to_string(n) + " minimum attained " + std::to_string(at_min) +
                                             " times, expected " + std::to_string(sparse_count(n)));
  }
}

void criterion4(Check& c) {
  const auto t0 = Clock::now();
  auto unique = [&](const EffectAlgebra& a, const State& s, const std::string& what) {
    const auto p = state_space(a);
    c.require(p.dimension == 0 && p.vertices.size() == 1 && p.vertices[0] == s, what + " unique state");
    return p;
  };
  for (int n = 2; n <= 8; ++n) {
    State s{0, 1};
    for (int k = 1; k <= n - 2; ++k) s.push_back(fraction(k, n - 1));
    const auto a = make_scale(n);
    const auto p = unique(a, s, "S" + std::to_string(n));
    c.require(is_order_determining(a, p), "S" + std::to_string(n) + " order-determining");
  }
  for (int n = 4; n <= 8; ++n) {
    State s{0, 1};
    s.resize(static_cast<std::size_t>(n), Rational(1, 2));
    const auto a = make_sparse(n - 2, 0);
    const auto p = unique(a, s, "D" + std::to_string(n));
    c.require(!is_separating(a, p), "D" + std::to_string(n) + " separating");
  }
  for (int l = 1; l <= 4; ++l) {
    const auto a = make_sparse(0, l);
    const auto p = state_space(a);
    c.require(p.dimension == l && p.vertices.size() == (std::size_t{1} << l),
              "P" + std::to_string(2 * l + 2) + " polytope");
    c.require(is_order_determining(a, p), "P" + std::to_string(2 * l + 2) + " order-determining");
  }
  {
    const auto& a = testing::named("E5(3)");
    const auto p = unique(a, with_trivial({Rational(1, 3), Rational(1, 2), Rational(2, 3)}), "E5(3)");
    c.require(is_separating(a, p) && !is_order_determining(a, p), "E5(3) separating, not order-determining");
  }
  const std::map<std::string, State> printed{
      {"E6(5)", with_trivial({Rational(1, 3), Rational(2, 3), Rational(1, 2), Rational(1, 2)})},
      {"E6(6)", with_trivial({Rational(1, 3), Rational(2, 3), Rational(1, 3), Rational(2, 3)})},
      {"E6(8)", with_trivial({Rational(1, 4), Rational(1, 2), Rational(3, 4), Rational(1, 2)})},
      {"E6(9)", with_trivial({Rational(1, 3), Rational(1, 3), Rational(2, 3), Rational(2, 3)})},
  };
  for (const auto& [name, s] : printed) {
    const auto& a = testing::named(name);
    const auto p = unique(a, s, name);
    c.require(!is_separating(a, p), name + " separating");
  }
  {
    const auto& a = testing::named("E6(2,1)");
    const auto p = state_space(a);
    c.require(p.dimension >= 1 && !is_separating(a, p), "E6(2,1) infinite non-separating");
  }
  c.require(state_space(testing::named("R9")).empty(), "R9 has states");
  const double s = seconds_since(t0);
  c.require(s < 1.0, "took " + std::to_string(s) + "s");
  c.note << " " << s << "s";
}

// Changes one entry of the model for the first nontrivial element.
void mutate(ModelDocument& doc) {
  switch (doc.kind) {
    case ModelKind::Multiplicative: {
      auto& v = std::get<MultiplicativeModel>(doc.model).assignment[2];
      v[0] = v[0] * Cyclotomic(3);
      break;
    }
    case ModelKind::Fuzzy: {
      auto& v = std::get<FuzzyAssignment>(doc.model).assignment[2];
      auto it = std::find_if(v.begin(), v.end(), [](const Rational& x) { return x != 0; });
      *it /= 2;
      break;
    }
    case ModelKind::Quantum: {
      auto& m = std::get<std::vector<ComplexMatrix>>(doc.model)[2];
      m[0][0] *= 0.5;
      break;
    }
  }
}

VerificationResult verify(const EffectAlgebra& a, const ModelDocument& doc) {
  switch (doc.kind) {
    case ModelKind::Multiplicative:
      return verify_multiplicative(a, std::get<MultiplicativeModel>(doc.model));
    case ModelKind::Fuzzy:
      return verify_fuzzy(a, std::get<FuzzyAssignment>(doc.model));
    case ModelKind::Quantum:
      return verify_quantum_matrices(a, std::get<std::vector<ComplexMatrix>>(doc.model), 1e-9);
  }
  return VerificationResult::failure("unknown kind");
}

void criterion5(Check& c) {
  const std::vector<std::string> models{
      "d4_vector",     "d5_vector",     "d6_vector",    "e5_1_1_vector", "e6_2_1_vector", "e6_5_complex",
      "e6_6_complex",  "e6_8_complex",  "e6_9_real",    "p4_fuzzy",      "e5_1_1_fuzzy",  "p6_fuzzy",
      "e6_4_fuzzy",    "e6_7_fuzzy",    "e8_fuzzy",     "e8_matrices"};
  for (const auto& name : models) {
    const std::string text = testing::slurp(testing::data_path("models/" + name + ".json"));
    const std::string table_name = nlohmann::json::parse(text).at("table").get<std::string>();
    const auto a = EffectAlgebra::from_table(parse_table(testing::slurp(testing::data_path("tables/" + table_name + ".txt"))));
    ModelDocument doc = parse_model(text, a.table());
    const auto ok = verify(a, doc);
    c.require(ok.ok, name + " rejected: " + ok.reason);
    mutate(doc);
    c.require(!verify(a, doc).ok, name + " accepted after mutation");
  }
  c.note << " " << models.size() << " models";
}

void criterion6(Check& c) {
  const auto& e8 = testing::named("E8");
  c.require(min_fuzzy_dimension(e8) == 3, "min fuzzy dimension is not 3");
  const auto two = fuzzy_dimension_search(e8, 2);
  c.require(!two.exists && two.analytic, "dimension 2 not ruled out analytically");
  c.require(!verify_fuzzy_dimension_bound(e8, 2), "dimension 2 bound holds");
  c.require(is_quantum(e8), "not quantum");
}

void criterion7(Check& c) {
  const auto s2 = make_scale(2);
  c.require(canon(compose(s2, s2).algebra) == canon(testing::named("P4")), "S2 x S2");
  c.require(canon(compose(s2, make_scale(3)).algebra) == canon(testing::named("E6(7)")), "S2 x S3");
  const auto printed = parse_table(testing::slurp(testing::data_path("tables/s2_times_s4.txt")));
  c.require(compose(s2, make_scale(4)).algebra.table() == printed, "S2 x S4 table");
  for (int n = 2; n <= 8; ++n) c.require(!is_composite(make_scale(n)), "S" + std::to_string(n) + " factored");
  int non_composite = 0;
  for (const auto& a : all_of_order(6))
    if (canon(a) != canon(testing::named("E6(7)"))) {
      c.require(!is_composite(a), "an order-6 algebra other than E6(7) factored");
      ++non_composite;
    }
  c.require(non_composite == 9, "expected nine non-composite order-6 algebras");

  const std::vector<Rational> ts{Rational(1, 4), Rational(1, 3), Rational(1, 2), Rational(2, 3)};
  int pairs = 0;
  for (int n1 = 2; n1 <= 6; ++n1)
    for (int n2 = 2; n1 * n2 <= 12; ++n2)
      for (const auto& a : all_of_order(n1))
        for (const auto& b : all_of_order(n2)) {
          const auto comp = compose(a, b);
          const auto sa = state_space(a).vertices;
          const auto sb = state_space(b).vertices;
          for (const auto& x : sa)
            for (const auto& y : sb)
              for (const auto& t : ts) {
                const State s = product_state(comp, x, y, t);
                const auto m1 = marginal_state(comp, s, 1);
                const auto m2 = marginal_state(comp, s, 2);
                c.require(is_state(comp.algebra, s) && m1 && *m1 == x && m2 && *m2 == y, "round trip failed");
              }
          ++pairs;
        }
  c.note << " " << pairs << " factor pairs";
}

void criterion8(Check& c) {
  auto rejected_with = [&](const std::string& file, std::optional<std::vector<ElementId>> triple) {
    const auto r = validate(parse_table(testing::slurp(testing::data_path("tables/" + file + ".txt"))));
    c.require(!r.ok(), file + " accepted");
    const bool found = std::any_of(r.violations.begin(), r.violations.end(), [&](const ViolationReport& v) {
      return v.kind == ViolationKind::AssociativityDefinedness && (!triple || v.witness == *triple);
    });
    c.require(found, file + " lacks the associativity witness");
  };
  rejected_with("spade4", std::vector<ElementId>{2, 2, 3});
  rejected_with("spade5_a", std::vector<ElementId>{2, 3, 4});
  rejected_with("spade5_b", std::nullopt);
  rejected_with("spade5_c", std::nullopt);
  rejected_with("sixths", std::vector<ElementId>{2, 2, 3});
}

void criterion9(Check& c) {
  std::size_t checked = 0;
  for (int n = 2; n <= 6; ++n)
    for (const auto& a : all_of_order(n)) {
      c.require(check_derived_laws(a).empty(), "derived law fails at order " + std::to_string(n));
      ++checked;
    }
  for (const char* name : {"E8", "R9"}) {
    c.require(check_derived_laws(testing::named(name)).empty(), std::string("derived law fails on ") + name);
    ++checked;
  }
  c.note << " " << checked << " algebras";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
      {"enumeration counts", criterion1},   {"quantum split", criterion2},       {"defined-count bounds", criterion3},
      {"state spaces", criterion4},         {"model verification", criterion5},  {"E8 dimension gap", criterion6},
      {"composition", criterion7},          {"negative fixtures", criterion8},   {"derived laws", criterion9},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    const bool ok = c.failures.empty();
    failed += !ok;
    std::cout << (ok ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first << c.note.str() << "\n";
    for (const auto& f : c.failures) std::cout << "    " << f << "\n";
  }
  return failed;
}
