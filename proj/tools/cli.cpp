#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "effalg/canonical.hpp"
#include "effalg/catalog.hpp"
#include "effalg/classify.hpp"
#include "effalg/compose.hpp"
#include "effalg/enumerate.hpp"
#include "effalg/io.hpp"
#include "effalg/models.hpp"
#include "effalg/states.hpp"
#include "json.hpp"

namespace effalg::cli {

namespace {

using json = nlohmann::ordered_json;

struct Exit {
  int code;
  std::string message;
};

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Exit{kInputError, "cannot read '" + path + "'"};
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << text)) throw Exit{kInputError, "cannot write '" + path + "'"};
}

SumTable load_table(const std::string& path) {
  const std::string text = read_input(path);
  try {
    return parse_table(text);
  } catch (const ParseError& e) {
    throw Exit{kInputError, path + ":" + e.what()};
  } catch (const StructuralError& e) {
    throw Exit{kInputError, path + ": " + e.what()};
  }
}

std::string witness_text(const SumTable& t, const std::vector<ElementId>& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + t.label(w[i]);
  return s + ")";
}

EffectAlgebra as_algebra(const SumTable& table, const std::string& what, std::ostream& err) {
  auto result = validate(table);
  if (result.ok()) return std::move(*result.algebra);
  for (const auto& v : result.violations)
    err << to_string(v.kind) << " " << witness_text(table, v.witness) << ": " << v.message << "\n";
  throw Exit{kInvalidTable, what + " is not an effect algebra"};
}

EffectAlgebra load_algebra(const std::string& path, std::ostream& err) { return as_algebra(load_table(path), path, err); }

Format format_of(const std::string& name) {
  const auto f = parse_format(name);
  if (!f) throw Exit{kUsage, "unknown format '" + name + "' (ascii, latex, json)"};
  return *f;
}

json state_json(const SumTable& t, const State& s) {
  json o = json::object();
  for (ElementId e = 0; e < t.order(); ++e) o[t.label(e)] = to_string(s[static_cast<std::size_t>(e)]);
  return o;
}

json table_json(const SumTable& t) { return json::parse(render(t, Format::Json)); }

json states_json(const EffectAlgebra& a, const StateAnalysis& s, bool with_vertices) {
  const SumTable& t = a.table();
  json o;
  o["dimension"] = s.polytope.dimension;
  o["vertex_count"] = s.polytope.vertices.size();
  o["unique_state"] = s.polytope.vertices.size() == 1 ? state_json(t, s.polytope.vertices[0]) : json(nullptr);
  o["separating"] = s.is_separating;
  o["order_determining"] = s.is_order_determining;
  o["quantum"] = s.is_quantum;
  o["min_fuzzy_dimension"] = s.min_fuzzy_dimension ? json(*s.min_fuzzy_dimension) : json(nullptr);
  if (s.fuzzy_embedding) {
    json emb = json::object();
    for (ElementId e = 0; e < t.order(); ++e) {
      json v = json::array();
      for (const auto& x : (*s.fuzzy_embedding)[static_cast<std::size_t>(e)]) v.push_back(to_string(x));
      emb[t.label(e)] = v;
    }
    o["fuzzy_embedding"] = emb;
  } else {
    o["fuzzy_embedding"] = nullptr;
  }
  if (with_vertices) {
    json vs = json::array();
    for (const auto& v : s.polytope.vertices) vs.push_back(state_json(t, v));
    o["vertices"] = vs;
    json dirs = json::array();
    for (const auto& d : s.polytope.directions) {
      json v = json::array();
      for (const auto& x : d) v.push_back(to_string(x));
      dirs.push_back(v);
    }
    o["directions"] = dirs;
  }
  return o;
}

std::string factor_name(const EffectAlgebra& a) {
  if (const auto* e = lookup(a.table())) return e->name;
  return classify(a).family_name.value_or("order " + std::to_string(a.order()));
}

json classification_json(const EffectAlgebra& a, bool with_factors) {
  const SumTable& t = a.table();
  const Classification c = classify(a);
  json o;
  o["name"] = c.family_name ? json(*c.family_name) : json(nullptr);
  o["n"] = c.n;
  o["defined_count"] = c.defined_count;
  o["totally_ordered"] = c.is_totally_ordered;
  o["scale"] = c.is_scale;
  o["scale_generator"] = c.scale_generator ? json(t.label(*c.scale_generator)) : json(nullptr);
  o["not_scale_precheck"] = c.not_scale_precheck;
  o["sparse"] = c.is_sparse;
  o["sparse_params"] = c.sparse_params ? json::array({c.sparse_params->first, c.sparse_params->second}) : json(nullptr);
  o["self_complementary_count"] = c.self_complementary_count;
  if (c.not_quantum_witness) {
    o["not_quantum_witness"] = {{"e", t.label(c.not_quantum_witness->e)},
                                {"f", t.label(c.not_quantum_witness->f)},
                                {"multiplicity", c.not_quantum_witness->multiplicity}};
  } else {
    o["not_quantum_witness"] = nullptr;
  }
  if (with_factors) {
    const auto f = is_composite(a);
    o["composite"] = f.has_value();
    o["factors"] = f ? json::array({factor_name(f->first), factor_name(f->second)}) : json(nullptr);
  } else {
    o["composite"] = nullptr;
  }
  return o;
}

// Flat "key: value" lines for nested JSON, scalars only.
void print_text(const json& j, std::ostream& out, const std::string& prefix = "") {
  for (const auto& [key, value] : j.items()) {
    const std::string name = prefix.empty() ? key : prefix + "." + key;
    if (value.is_object()) {
      print_text(value, out, name);
    } else if (value.is_string()) {
      out << name << ": " << value.get<std::string>() << "\n";
    } else {
      out << name << ": " << value.dump() << "\n";
    }
  }
}

void emit(const json& j, bool as_json, std::ostream& out) {
  if (as_json) out << j.dump(2) << "\n";
  else print_text(j, out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite effect algebras: enumeration, validation, states and models", "effalg"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand all help");

  // enumerate
  int n = 0;
  bool count_only = false;
  std::string enum_format = "ascii";
  unsigned jobs = 1;
  bool show_stats = false;
  bool raw = false;
  auto* c_enum = app.add_subcommand("enumerate", "All algebras of one order up to isomorphism");
  c_enum->add_option("-n", n, "Order")->required()->check(CLI::Range(2, 12));
  c_enum->add_flag("--count-only", count_only, "Print only the number of algebras");
  c_enum->add_option("--format", enum_format, "ascii or json");
  c_enum->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1u, 256u));
  c_enum->add_flag("--stats", show_stats, "Report search statistics on stderr");
  c_enum->add_flag("--raw", raw, "Skip isomorph rejection during the search and deduplicate afterwards");

  // validate
  std::string file1, file2, out_path;
  std::string fmt = "ascii";
  auto* c_validate = app.add_subcommand("validate", "Check the effect algebra axioms (exit 2 when they fail)");
  c_validate->add_option("FILE", file1, "Table document")->required();

  // classify
  std::string name;
  bool as_json = false;
  bool no_factor = false;
  auto* c_classify = app.add_subcommand("classify", "Structural flags and state analysis");
  auto* classify_file = c_classify->add_option("FILE", file1, "Table document");
  auto* classify_name = c_classify->add_option("--name", name, "Catalog name instead of a file");
  classify_file->excludes(classify_name);
  std::string report_fmt;
  c_classify->add_flag("--json", as_json, "JSON output");
  c_classify->add_option("--format", report_fmt, "json or text")->check(CLI::IsMember({"json", "text"}));
  c_classify->add_flag("--no-factor", no_factor, "Skip the factorization search");

  // states
  bool vertices = false;
  bool min_fuzzy = false;
  auto* c_states = app.add_subcommand("states", "State space of an algebra");
  c_states->add_option("FILE", file1, "Table document")->required();
  c_states->add_flag("--vertices", vertices, "List vertices and affine directions");
  c_states->add_flag("--min-fuzzy-dim", min_fuzzy, "Include the minimal order-determining vertex set");
  c_states->add_flag("--json", as_json, "JSON output");
  c_states->add_option("--format", report_fmt, "json or text")->check(CLI::IsMember({"json", "text"}));

  // canon
  auto* c_canon = app.add_subcommand("canon", "Canonical relabeling");
  c_canon->add_option("FILE", file1, "Table document")->required();
  c_canon->add_option("--format", fmt, "ascii, latex or json");

  // iso
  auto* c_iso = app.add_subcommand("iso", "Isomorphism test (exit 3 when not isomorphic)");
  c_iso->add_option("FILE1", file1, "Table document")->required();
  c_iso->add_option("FILE2", file2, "Table document")->required();

  // compose
  auto* c_compose = app.add_subcommand("compose", "Cartesian product of two algebras");
  c_compose->add_option("FILE1", file1, "First factor")->required();
  c_compose->add_option("FILE2", file2, "Second factor")->required();
  c_compose->add_option("-o,--output", out_path, "Write the table here instead of stdout");
  c_compose->add_option("--format", fmt, "ascii, latex or json");

  // factor
  auto* c_factor = app.add_subcommand("factor", "Find a factorization as a composite");
  c_factor->add_option("FILE", file1, "Table document")->required();

  // verify-model
  double tol = 1e-9;
  bool weak = false;
  auto* c_model = app.add_subcommand("verify-model", "Check a multiplicative, fuzzy or matrix model (exit 3 on failure)");
  c_model->add_option("TABLE", file1, "Table document")->required();
  c_model->add_option("MODEL", file2, "Model document")->required();
  c_model->add_option("--tol", tol, "Tolerance for matrix models")->check(CLI::PositiveNumber);
  c_model->add_flag("--weak", weak, "Fuzzy models: only require defined sums to be respected");

  // catalog
  bool list = false;
  std::string export_name;
  bool standalone = false;
  auto* c_catalog = app.add_subcommand("catalog", "Named algebras");
  auto* cat_list = c_catalog->add_flag("--list", list, "List names");
  auto* cat_export = c_catalog->add_option("--export", export_name, "Print the table of NAME");
  cat_list->excludes(cat_export);
  c_catalog->add_option("--format", fmt, "ascii, latex or json");
  c_catalog->add_flag("--standalone", standalone, "LaTeX: emit a complete document");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "effalg: " << e.what() << "\n";
    return kUsage;
  }

  if (report_fmt == "json") as_json = true;

  try {
    if (c_enum->parsed()) {
      const Format f = format_of(enum_format);
      if (f == Format::Latex) throw Exit{kUsage, "enumerate supports ascii or json"};
      EnumerationOptions opt;
      opt.count_only = count_only;
      opt.jobs = jobs;
      opt.orderly = !raw;
      const EnumerationResult r = enumerate(n, opt);
      if (show_stats) {
        const auto& s = r.stats;
        err << "nodes " << s.nodes << "\npruned unit " << s.pruned_unit << "\npruned self " << s.pruned_self
            << "\npruned ET5 " << s.pruned_et5 << "\npruned ET6 " << s.pruned_et6 << "\npruned ET7 " << s.pruned_et7
            << "\npruned full-row " << s.pruned_full_row << "\npruned associativity " << s.pruned_associativity
            << "\npruned non-canonical " << s.pruned_noncanonical << "\nrejected by validate " << s.rejected_by_validate
            << "\ncomplete tables " << s.raw_tables << "\n";
      }
      if (count_only) {
        if (f == Format::Json) out << json{{"n", n}, {"count", r.count}}.dump() << "\n";
        else out << r.count << "\n";
        return kOk;
      }
      if (f == Format::Json) {
        json doc{{"n", n}, {"count", r.count}, {"algebras", json::array()}};
        for (const auto& a : r.algebras) doc["algebras"].push_back(table_json(a.table()));
        out << doc.dump() << "\n";
      } else {
        for (std::size_t i = 0; i < r.algebras.size(); ++i) {
          if (i) out << "\n";
          const auto* entry = lookup(r.algebras[i].table());
          out << "# " << (i + 1) << " of " << r.count << (entry ? " (" + entry->name + ")" : std::string()) << "\n";
          out << render(r.algebras[i].table(), Format::Ascii);
        }
      }
      return kOk;
    }

    if (c_validate->parsed()) {
      const SumTable t = load_table(file1);
      const auto result = validate(t);
      if (!result.ok()) {
        for (const auto& v : result.violations)
          out << to_string(v.kind) << " " << witness_text(t, v.witness) << ": " << v.message << "\n";
        err << "effalg: " << file1 << " is not an effect algebra (" << result.violations.size() << " violations)\n";
        return kInvalidTable;
      }
      const auto count = result.algebra->count_defined();
      out << "valid: " << t.order() << " elements, " << count.defined << " defined nontrivial sums\n";
      return kOk;
    }

    if (c_classify->parsed()) {
      EffectAlgebra a = [&] {
        if (!name.empty()) {
          const CatalogEntry* e = find_entry(name);
          if (!e) throw Exit{kUsage, "no catalog entry named '" + name + "'"};
          return e->algebra;
        }
        if (file1.empty()) throw Exit{kUsage, "classify needs FILE or --name"};
        return load_algebra(file1, err);
      }();
      json doc = classification_json(a, !no_factor);
      const StateAnalysis s = analyze_states(a);
      json st = states_json(a, s, false);
      st.erase("fuzzy_embedding");
      st.erase("unique_state");
      for (auto& [k, v] : st.items()) doc[k] = v;
      emit(doc, as_json, out);
      return kOk;
    }

    if (c_states->parsed()) {
      const EffectAlgebra a = load_algebra(file1, err);
      StateAnalysis s;
      if (min_fuzzy) {
        s = analyze_states(a);
      } else {
        s.polytope = state_space(a);
        s.is_separating = is_separating(a, s.polytope);
        s.is_order_determining = is_order_determining(a, s.polytope);
        s.is_quantum = s.is_order_determining;
      }
      json doc = states_json(a, s, vertices);
      if (!min_fuzzy) {
        doc.erase("min_fuzzy_dimension");
        doc.erase("fuzzy_embedding");
      }
      if (as_json) {
        out << doc.dump(2) << "\n";
      } else {
        json flat = doc;
        flat.erase("vertices");
        flat.erase("directions");
        flat.erase("fuzzy_embedding");
        print_text(flat, out);
        if (vertices)
          for (const auto& v : s.polytope.vertices) {
            out << "vertex:";
            for (ElementId e = 2; e < a.order(); ++e)
              out << " " << a.table().label(e) << "=" << to_string(v[static_cast<std::size_t>(e)]);
            out << "\n";
          }
        if (min_fuzzy && s.fuzzy_embedding)
          for (ElementId e = 2; e < a.order(); ++e) {
            out << "embedding " << a.table().label(e) << ":";
            for (const auto& x : (*s.fuzzy_embedding)[static_cast<std::size_t>(e)]) out << " " << to_string(x);
            out << "\n";
          }
      }
      return kOk;
    }

    if (c_canon->parsed()) {
      const SumTable t = load_table(file1);
      const CanonicalForm c = canonical_form(t);
      const Format f = format_of(fmt);
      if (f == Format::Ascii) {
        out << "# relabeling:";
        for (ElementId e = 2; e < t.order(); ++e)
          out << " " << t.label(e) << "->" << c.table.label(c.permutation[static_cast<std::size_t>(e)]);
        out << "\n";
      }
      out << render(c.table, f);
      return kOk;
    }

    if (c_iso->parsed()) {
      const SumTable a = load_table(file1);
      const SumTable b = load_table(file2);
      const bool iso = are_isomorphic(a, b);
      out << (iso ? "isomorphic" : "not isomorphic") << "\n";
      return iso ? kOk : kNegative;
    }

    if (c_compose->parsed()) {
      const EffectAlgebra a = load_algebra(file1, err);
      const EffectAlgebra b = load_algebra(file2, err);
      const Format f = format_of(fmt);
      write_output(out_path, render(compose(a, b).algebra.table(), f), out);
      return kOk;
    }

    if (c_factor->parsed()) {
      const EffectAlgebra a = load_algebra(file1, err);
      const auto fct = is_composite(a);
      if (!fct) {
        out << "not composite\n";
        return kOk;
      }
      out << "composite: " << factor_name(fct->first) << " x " << factor_name(fct->second) << "\n";
      out << render(fct->first.table(), Format::Ascii) << "\n" << render(fct->second.table(), Format::Ascii);
      return kOk;
    }

    if (c_model->parsed()) {
      const EffectAlgebra a = load_algebra(file1, err);
      const std::string text = read_input(file2);
      ModelDocument doc = [&] {
        try {
          return parse_model(text, a.table());
        } catch (const ParseError& e) {
          throw Exit{kInputError, file2 + ":" + e.what()};
        }
      }();
      VerificationResult r;
      try {
        switch (doc.kind) {
          case ModelKind::Multiplicative:
            r = verify_multiplicative(a, std::get<MultiplicativeModel>(doc.model));
            break;
          case ModelKind::Fuzzy:
            r = verify_fuzzy(a, std::get<FuzzyAssignment>(doc.model), weak);
            break;
          case ModelKind::Quantum:
            r = verify_quantum_matrices(a, std::get<std::vector<ComplexMatrix>>(doc.model), tol);
            break;
        }
      } catch (const std::invalid_argument& e) {
        throw Exit{kInputError, file2 + ": " + e.what()};
      }
      if (r) {
        out << "model verified\n";
        return kOk;
      }
      out << "model rejected: " << r.reason << "\n";
      return kNegative;
    }

    if (c_catalog->parsed()) {
      if (!export_name.empty()) {
        const CatalogEntry* e = find_entry(export_name);
        if (!e) throw Exit{kUsage, "no catalog entry named '" + export_name + "'"};
        RenderOptions ro;
        ro.latex_standalone = standalone;
        out << render(e->algebra.table(), format_of(fmt), ro);
        return kOk;
      }
      for (const auto& e : catalog()) {
        out << e.name << "\t" << e.algebra.order();
        out << "\t" << e.description;
        for (const auto& a : e.aliases) out << " (alias " << a << ")";
        out << "\n";
      }
      return kOk;
    }
  } catch (const Exit& e) {
    if (!e.message.empty()) err << "effalg: " << e.message << "\n";
    return e.code;
  } catch (const std::exception& e) {
    err << "effalg: internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}

}  // namespace effalg::cli
