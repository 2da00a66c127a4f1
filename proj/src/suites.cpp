#include "homcolor/suites.hpp"

#include <cctype>
#include <set>
#include <sstream>

#include "homcolor/error.hpp"

namespace homcolor {

namespace {

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_words(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  for (std::string w; is >> w;) out.push_back(w);
  return out;
}

}  // namespace

Suite parse_suite(std::string_view text) {
  Suite suite;
  std::vector<std::pair<std::string, std::string>> bodies;  // schema name, expression
  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  auto where = [&] { return " (suite line " + std::to_string(lineno) + ")"; };

  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw.substr(0, raw.find('#'));
    if (trim(line).empty()) continue;
    bool continuation = std::isspace(static_cast<unsigned char>(line.front()));
    line = trim(line);
    if (continuation) {
      if (bodies.empty()) throw StructuralError("continuation line before any schema" + where());
      bodies.back().second += " " + line;
      continue;
    }
    if (line.rfind("suite ", 0) == 0) {
      suite.name = trim(line.substr(6));
    } else if (line.rfind("slots ", 0) == 0 || line == "slots") {
      suite.slots = split_words(line.substr(5));
    } else if (auto colon = line.find(':'); colon != std::string::npos) {
      bodies.emplace_back(trim(line.substr(0, colon)), trim(line.substr(colon + 1)));
    } else {
      throw StructuralError("unrecognized suite line '" + line + "'" + where());
    }
  }

  if (suite.name.empty()) throw StructuralError("suite text has no 'suite' line");
  if (suite.slots.empty()) throw StructuralError("suite '" + suite.name + "' declares no slots");
  if (bodies.empty()) throw StructuralError("suite '" + suite.name + "' has no schemas");
  std::set<std::string> slot_set(suite.slots.begin(), suite.slots.end());
  if (slot_set.size() != suite.slots.size()) throw StructuralError("suite '" + suite.name + "' repeats a slot");

  std::set<std::string> names;
  for (auto& [name, body] : bodies) {
    if (!names.insert(name).second) throw StructuralError("suite '" + suite.name + "' repeats schema '" + name + "'");
    auto schema = parse_identity(body, name);
    for (const auto& p : schema.product_names())
      if (!slot_set.count(p))
        throw StructuralError("schema '" + name + "' of suite '" + suite.name + "' uses undeclared slot '" + p + "'");
    suite.schemas.push_back(std::move(schema));
  }
  return suite;
}

std::string render_suite(const Suite& suite) {
  std::ostringstream os;
  os << "suite " << suite.name << "\nslots";
  for (const auto& s : suite.slots) os << ' ' << s;
  os << '\n';
  for (const auto& schema : suite.schemas) os << schema.name << ": " << render_identity(schema) << '\n';
  return os.str();
}

const SuiteRegistry& SuiteRegistry::builtin() {
  static const SuiteRegistry registry = [] {
    SuiteRegistry r;
    for (const auto& [stem, text] : builtin_suite_sources()) r.add(parse_suite(text));
    return r;
  }();
  return registry;
}

void SuiteRegistry::add(Suite suite) {
  if (contains(suite.name)) throw StructuralError("duplicate suite '" + suite.name + "'");
  suites_.push_back(std::move(suite));
}

const Suite& SuiteRegistry::get(const std::string& name) const {
  for (const auto& s : suites_)
    if (s.name == name) return s;
  throw StructuralError("unknown suite '" + name + "'");
}

bool SuiteRegistry::contains(const std::string& name) const {
  for (const auto& s : suites_)
    if (s.name == name) return true;
  return false;
}

bool SuiteReport::passed() const { return first_failure() == nullptr; }

const CheckReport* SuiteReport::first_failure() const {
  for (const auto& r : reports)
    if (!r.passed) return &r;
  return nullptr;
}

Binding resolve_binding(const HomAlgebra& alg, const std::vector<std::string>& slots, const Binding& given) {
  for (const auto& [slot, product] : given) {
    bool known = false;
    for (const auto& s : slots) known = known || s == slot;
    if (!known) throw StructuralError("binding names unknown slot '" + slot + "'");
    if (!alg.has_product(product)) throw StructuralError("binding refers to unknown product '" + product + "'");
  }
  const bool positional = given.empty() && alg.products().size() == slots.size();
  Binding out;
  for (std::size_t k = 0; k < slots.size(); ++k) {
    const auto& slot = slots[k];
    if (auto it = given.find(slot); it != given.end()) out[slot] = it->second;
    else if (alg.has_product(slot)) out[slot] = slot;
    else if (positional) out[slot] = alg.products()[k].name();
    else throw StructuralError("incomplete binding: slot '" + slot + "' is unbound");
  }
  return out;
}

SuiteReport check_suite(const HomAlgebra& alg, const Suite& suite, const Binding& binding) {
  SuiteReport report;
  report.suite = suite.name;
  report.binding = resolve_binding(alg, suite.slots, binding);
  for (const auto& schema : suite.schemas) {
    report.schemas.push_back(schema.name);
    report.reports.push_back(evaluate_identity(alg, schema, report.binding));
  }
  return report;
}

SuiteReport check_suite(const HomAlgebra& alg, const std::string& suite, const Binding& binding,
                        const SuiteRegistry& registry) {
  return check_suite(alg, registry.get(suite), binding);
}

CheckReport check_multiplicative(const HomAlgebra& alg) {
  CheckReport report;
  const auto& alpha = alg.alpha();
  for (const auto& p : alg.products())
    for (std::size_t i = 0; i < alg.dimension(); ++i)
      for (std::size_t j = 0; j < alg.dimension(); ++j) {
        ++report.tuples_checked;
        Vector r = alpha(p.at(i, j)) - p(alpha.image(i), alpha.image(j));
        if (!r.is_zero()) {
          report.passed = false;
          report.witness = Witness{"multiplicative[" + p.name() + "]", {i, j}, std::move(r)};
          return report;
        }
      }
  return report;
}

}  // namespace homcolor
