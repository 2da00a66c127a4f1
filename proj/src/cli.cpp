#include "homcolor/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "homcolor/constructions.hpp"
#include "homcolor/error.hpp"
#include "homcolor/search.hpp"

namespace homcolor {

namespace {

std::string render_vector_text(const GradedSpace& space, const Vector& v) {
  if (v.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [i, c] : v.entries()) {
    Rational mag = abs(c);
    s += first ? (sgn(c) < 0 ? "-" : "") : (sgn(c) < 0 ? " - " : " + ");
    if (mag != 1) s += to_string(mag) + "*";
    s += space.name(i);
    first = false;
  }
  return s;
}

std::string render_report_text(const HomAlgebra& alg, const std::string& label, const CheckReport& r) {
  std::ostringstream os;
  os << (r.passed ? "PASS " : "FAIL ") << label << " (" << r.tuples_checked << " tuples)";
  if (r.witness) {
    os << "\n    at (";
    for (std::size_t k = 0; k < r.witness->tuple.size(); ++k)
      os << (k ? ", " : "") << alg.space().name(r.witness->tuple[k]);
    os << "): residual " << render_vector_text(alg.space(), r.witness->residual);
  }
  return os.str();
}

std::string render_suite_text(const HomAlgebra& alg, const SuiteReport& r) {
  std::ostringstream os;
  os << (r.passed() ? "PASS " : "FAIL ") << r.suite << " [";
  bool first = true;
  for (const auto& [slot, prod] : r.binding) {
    os << (first ? "" : ", ") << slot << "=" << prod;
    first = false;
  }
  os << "]";
  for (std::size_t k = 0; k < r.reports.size(); ++k)
    os << "\n  " << render_report_text(alg, k < r.schemas.size() ? r.schemas[k] : "schema", r.reports[k]);
  return os.str();
}

void emit(std::ostream& out, const json& j, bool pretty) { out << (pretty ? j.dump(2) : j.dump()) << "\n"; }

std::vector<Rational> parse_entry_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw StructuralError("empty entry in --entries");
    out.push_back(parse_rational(item.substr(b, e - b + 1)));
  }
  return out;
}

std::vector<std::string> split_names(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

// Checks every "expected" annotation of a document.
int check_expected(const AlgebraDocument& doc, std::ostream& out, bool pretty) {
  const HomAlgebra& alg = doc.algebra;
  if (doc.expected.empty()) throw StructuralError("no --suite given and the document has no \"expected\" entries");
  json results = json::array();
  bool ok = true;
  std::string text;
  for (const auto& exp : doc.expected) {
    if (exp.contains("suite")) {
      Binding b = exp.contains("bind") ? exp.at("bind").get<Binding>() : Binding{};
      SuiteReport r = check_suite(alg, exp.at("suite").get<std::string>(), b);
      ok = ok && r.passed();
      results.push_back(render_suite_report(alg, r));
      text += render_suite_text(alg, r) + "\n";
    } else if (exp.contains("operator")) {
      OperatorKind kind{parse_operator_tag(exp.at("operator").get<std::string>()), 0};
      if (exp.contains("weight")) kind.weight = parse_rational_json(exp.at("weight"), "expected.weight");
      std::string map = exp.value("map", "R");
      CheckReport r = check_operator(alg, kind, resolve_map_spec(alg, map));
      ok = ok && r.passed;
      json j = render_report(alg, r);
      j["operator"] = to_string(kind.tag);
      j["map"] = map;
      results.push_back(j);
      text += render_report_text(alg, to_string(kind.tag) + " " + map, r) + "\n";
    } else {
      throw StructuralError("expected entry needs \"suite\" or \"operator\"");
    }
  }
  if (pretty)
    out << text;
  else
    emit(out, {{"passed", ok}, {"results", results}}, false);
  return ok ? 0 : 1;
}

}  // namespace

Binding parse_bindings(const std::vector<std::string>& pairs) {
  Binding b;
  for (const auto& p : pairs) {
    auto eq = p.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == p.size())
      throw StructuralError("binding '" + p + "' must look like slot=product");
    if (!b.emplace(p.substr(0, eq), p.substr(eq + 1)).second)
      throw StructuralError("slot '" + p.substr(0, eq) + "' bound twice");
  }
  return b;
}

LinearMap resolve_map_spec(const HomAlgebra& alg, const std::string& spec) {
  const std::size_t n = alg.dimension();
  if (auto it = alg.maps().find(spec); it != alg.maps().end()) return it->second;
  if (spec == "alpha") return alg.alpha();
  if (spec == "id") return LinearMap::identity(n);
  if (spec == "zero" || spec == "0") return LinearMap::zero(n, n);
  if (spec.size() > 3 && spec.ends_with("*id")) return LinearMap::scalar(parse_rational(spec.substr(0, spec.size() - 3)), n);
  if (!spec.empty() && spec.front() == '[') {
    json m;
    try {
      m = json::parse(spec);
    } catch (const json::parse_error& e) {
      throw StructuralError("map matrix is not valid JSON: " + std::string(e.what()));
    }
    return parse_matrix(m, n, "map");
  }
  throw StructuralError("unknown map '" + spec + "' (use a document map name, alpha, id, zero, c*id or a JSON matrix)");
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run_cli(args, out, err);
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checker and construction engine for color Hom-algebras", "homcolor"};
  app.require_subcommand(1);
  bool pretty = false;
  app.add_flag("--pretty", pretty, "Human-readable output instead of JSON");

  std::string file, file2, suite, schema, op, out_path, kind = "rota_baxter", weight = "0", entries = "-1,0,1";
  std::string map_spec, map2_spec = "id", mode = "tridendriform", bracket = "commutator", ideal, op_map = "R";
  std::vector<std::string> binds, products;
  std::size_t limit = 1'000'000;
  unsigned power = 1, k = 1, threads = 0;
  int dtype = 1, variant = 1;
  bool no_verify = false, compose_alpha = false, multiplicative = false;
  std::string operator_kind;

  auto* check = app.add_subcommand("check", "Check an algebra document against a suite or operator identity");
  check->add_option("file", file, "Algebra document")->required();
  check->add_option("--suite", suite, "Suite name (default: the document's expected annotations)");
  check->add_option("--bind", binds, "slot=product")->take_all();
  check->add_option("--operator", operator_kind, "rota_baxter | nijenhuis | averaging | centroid");
  check->add_option("--map", op_map, "Operator map (document map name, alpha, id, zero, c*id, JSON matrix)");
  check->add_option("--weight", weight, "Rota-Baxter weight");
  check->add_option("--product", products, "Restrict the operator check to these products")->take_all();
  check->add_flag("--multiplicative", multiplicative, "Check that alpha is multiplicative");

  auto* construct = app.add_subcommand("construct", "Apply a construction and write the result document");
  construct->add_option("file", file, "Input algebra document")->required();
  construct->add_option("file2", file2, "Second input (tensor_product)");
  construct->add_option("--op", op, "Construction name")->required();
  construct->add_option("-o,--output", out_path, "Output document path");
  construct->add_option("--map", map_spec, "Map parameter (beta, R, N or beta1)");
  construct->add_option("--map2", map2_spec, "Second centroid element");
  construct->add_option("--weight", weight, "Rota-Baxter weight");
  construct->add_option("--mode", mode, "rb_split mode: tridendriform | dendriform");
  construct->add_option("--kind", bracket, "bracket_from kind: commutator | dialgebra");
  construct->add_option("--power", power, "yau_twist exponent n");
  construct->add_option("--type", dtype, "derived_algebra type (1 or 2)");
  construct->add_option("--k", k, "derived_algebra level");
  construct->add_option("--variant", variant, "centroid_twist variant (1 or 2)");
  construct->add_option("--suite", suite, "Suite the input satisfies (yau_twist, derived_algebra, centroid_twist)");
  construct->add_option("--ideal", ideal, "Comma-separated basis names spanning the ideal");
  construct->add_option("--bind", binds, "slot=product for reading the input")->take_all();
  construct->add_flag("--compose-alpha", compose_alpha, "nijenhuis_deform: compose the deformed product with alpha");
  construct->add_flag("--no-verify", no_verify, "Skip the hypothesis checks");

  auto* search = app.add_subcommand("search", "Enumerate even operators on a grid of entries");
  search->add_option("file", file, "Algebra document")->required();
  search->add_option("--kind", kind, "rota_baxter | nijenhuis | averaging | centroid");
  search->add_option("--weight", weight, "Rota-Baxter weight");
  search->add_option("--entries", entries, "Comma-separated rationals");
  search->add_option("--limit", limit, "Maximum number of candidates");
  search->add_option("--product", products, "Restrict the check to these products")->take_all();
  search->add_option("--threads", threads, "Worker threads (0 = all cores)");

  auto* identity = app.add_subcommand("identity", "Check an ad-hoc identity");
  identity->add_option("file", file, "Algebra document")->required();
  identity->add_option("--schema", schema, "Identity in the DSL, e.g. \"mu(mu(x,y),a(z)) - mu(a(x),mu(y,z))\"")
      ->required();
  identity->add_option("--bind", binds, "name=product")->take_all();

  auto* describe = app.add_subcommand("describe", "Summarize an algebra document");
  describe->add_option("file", file, "Algebra document")->required();

  auto* list = app.add_subcommand("list-suites", "List the built-in suites");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    if (list->parsed()) {
      json suites = json::array();
      std::ostringstream text;
      for (const auto& s : SuiteRegistry::builtin().suites()) {
        suites.push_back({{"name", s.name}, {"slots", s.slots}, {"schemas", s.schemas.size()}});
        text << s.name << " (";
        for (std::size_t i = 0; i < s.slots.size(); ++i) text << (i ? " " : "") << s.slots[i];
        text << "): " << s.schemas.size() << " schema" << (s.schemas.size() == 1 ? "" : "s") << "\n";
      }
      if (pretty)
        out << text.str();
      else
        emit(out, suites, false);
      return 0;
    }

    AlgebraDocument doc = load_document_file(file);
    const HomAlgebra& alg = doc.algebra;

    if (describe->parsed()) {
      json basis = json::array();
      for (const auto& b : alg.space().basis()) basis.push_back({{"name", b.name}, {"degree", b.degree.coords}});
      json prods = json::array();
      for (const auto& p : alg.products()) prods.push_back({{"name", p.name()}, {"nonzero_entries", p.table().size()}});
      json maps = json::array();
      for (const auto& [name, m] : alg.maps()) maps.push_back(name);
      json info = {{"dimension", alg.dimension()},
                   {"group", {{"free_rank", alg.group().free_rank()}, {"torsion", alg.group().torsion()}}},
                   {"basis", basis},
                   {"products", prods},
                   {"maps", maps},
                   {"multiplicative", check_multiplicative(alg).passed}};
      if (!doc.description.empty()) info["description"] = doc.description;
      if (pretty) {
        out << "dimension " << alg.dimension() << "\n";
        for (const auto& b : alg.space().basis()) out << "  " << b.name << "  degree " << to_string(b.degree) << "\n";
        for (const auto& p : alg.products())
          out << "product " << p.name() << ": " << p.table().size() << " nonzero entries\n";
        out << "alpha multiplicative: " << (info["multiplicative"].get<bool>() ? "yes" : "no") << "\n";
      } else {
        emit(out, info, false);
      }
      return 0;
    }

    if (check->parsed()) {
      if (multiplicative) {
        CheckReport r = check_multiplicative(alg);
        if (pretty)
          out << render_report_text(alg, "multiplicative", r) << "\n";
        else
          emit(out, render_report(alg, r), false);
        return r.passed ? 0 : 1;
      }
      if (!operator_kind.empty()) {
        OperatorKind kd{parse_operator_tag(operator_kind), 0};
        if (kd.tag == OperatorKind::Tag::rota_baxter) kd.weight = parse_rational(weight);
        CheckReport r = check_operator(alg, kd, resolve_map_spec(alg, op_map), products);
        if (pretty)
          out << render_report_text(alg, to_string(kd.tag) + " " + op_map, r) << "\n";
        else
          emit(out, render_report(alg, r), false);
        return r.passed ? 0 : 1;
      }
      if (suite.empty()) return check_expected(doc, out, pretty);
      SuiteReport r = check_suite(alg, suite, parse_bindings(binds));
      if (pretty)
        out << render_suite_text(alg, r) << "\n";
      else
        emit(out, render_suite_report(alg, r), false);
      return r.passed() ? 0 : 1;
    }

    if (identity->parsed()) {
      IdentitySchema s = parse_identity(schema, "identity");
      CheckReport r = evaluate_identity(alg, s, parse_bindings(binds));
      if (pretty)
        out << render_report_text(alg, render_identity(s), r) << "\n";
      else
        emit(out, render_report(alg, r), false);
      return r.passed ? 0 : 1;
    }

    if (search->parsed()) {
      SearchSpec spec;
      spec.kind = {parse_operator_tag(kind), 0};
      if (spec.kind.tag == OperatorKind::Tag::rota_baxter) spec.kind.weight = parse_rational(weight);
      spec.entries = parse_entry_list(entries);
      spec.limit = limit;
      spec.products = products;
      spec.threads = threads;
      auto maps = search_operators(alg, spec);
      json found = json::array();
      for (const auto& m : maps) found.push_back(render_matrix(m));
      json result = {{"kind", to_string(spec.kind.tag)},
                     {"candidates", search_space_size(alg, spec).get_str()},
                     {"count", maps.size()},
                     {"maps", found}};
      if (spec.kind.tag == OperatorKind::Tag::rota_baxter) result["weight"] = to_string(spec.kind.weight);
      emit(out, result, pretty);
      return 0;
    }

    // construct
    ConstructionOptions opt;
    opt.check_preconditions = !no_verify;
    opt.input_binding = parse_bindings(binds);
    std::vector<HomAlgebra> inputs{alg};
    if (!file2.empty()) inputs.push_back(load_document_file(file2).algebra);
    json params = json::object();
    auto need_map = [&](const std::string& spec_text, const char* what) {
      if (spec_text.empty()) throw StructuralError(op + " needs --map (" + what + ")");
      return render_matrix(resolve_map_spec(alg, spec_text));
    };
    if (op == "nijenhuis_deform") {
      params = {{"map", need_map(map_spec, "N")}, {"compose_alpha", compose_alpha}};
    } else if (op == "averaging_dialgebra") {
      params = {{"map", need_map(map_spec, "averaging operator")}};
    } else if (op == "rb_split") {
      params = {{"map", need_map(map_spec.empty() ? "R" : map_spec, "Rota-Baxter map")},
                {"weight", weight},
                {"mode", mode}};
    } else if (op == "bracket_from") {
      params = {{"kind", bracket}};
    } else if (op == "yau_twist") {
      params = {{"map", need_map(map_spec, "beta")}, {"power", power}, {"suite", suite}};
    } else if (op == "derived_algebra") {
      params = {{"type", dtype}, {"k", k}, {"suite", suite}};
    } else if (op == "centroid_twist") {
      params = {{"map1", need_map(map_spec, "beta1")},
                {"map2", need_map(map2_spec, "beta2")},
                {"variant", variant},
                {"suite", suite}};
    } else if (op == "ideal_dialgebra") {
      params = {{"ideal", split_names(ideal)}};
    }

    ConstructionResult res;
    try {
      res = run_construction(op, inputs, params, opt);
    } catch (const PreconditionError& e) {
      json detail = json::parse(e.detail(), nullptr, false);
      json j = {{"construction", op}, {"passed", false}, {"precondition", e.precondition()}, {"detail", detail}};
      if (pretty)
        out << "precondition failed: " << e.precondition() << "\n" << detail.dump(2) << "\n";
      else
        emit(out, j, false);
      return 1;
    }
    AlgebraDocument outdoc{res.algebra, "", json::array(), res.provenance};
    if (!res.expected_suite.empty()) outdoc.expected.push_back({{"suite", res.expected_suite}, {"bind", res.expected_binding}});
    json summary = {{"construction", op}, {"expected_suite", res.expected_suite}};
    if (res.verification) summary["verification"] = render_suite_report(res.algebra, *res.verification);
    bool ok = !res.verification || res.verification->passed();
    summary["passed"] = ok;
    if (!out_path.empty()) {
      std::ofstream f(out_path, std::ios::binary);
      if (!f) throw StructuralError("cannot write " + out_path);
      f << render_document(outdoc).dump(2) << "\n";
      summary["output"] = out_path;
    } else {
      summary["algebra"] = render_document(outdoc);
    }
    if (pretty) {
      out << op << ": " << (ok ? "ok" : "post-check failed");
      if (!out_path.empty()) out << ", written to " << out_path;
      out << "\n";
      if (res.verification) out << render_suite_text(res.algebra, *res.verification) << "\n";
    } else {
      emit(out, summary, false);
    }
    return ok ? 0 : 1;
  } catch (const SearchOverflow& e) {
    emit(err, {{"error", e.what()}, {"count", e.count()}, {"limit", e.limit()}}, pretty);
    return 2;
  } catch (const StructuralError& e) {
    emit(err, {{"error", e.what()}}, pretty);
    return 2;
  } catch (const std::exception& e) {
    emit(err, {{"error", e.what()}}, pretty);
    return 2;
  }
}

}  // namespace homcolor
