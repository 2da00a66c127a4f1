#include "homcolor/document.hpp"

#include <fstream>
#include <sstream>

#include "homcolor/error.hpp"

namespace homcolor {

namespace {

const json& require(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) throw StructuralError(where + ": missing \"" + key + "\"");
  return obj.at(key);
}

std::int64_t as_int(const json& v, const std::string& where) {
  if (!v.is_number_integer()) throw StructuralError(where + ": expected an integer");
  return v.get<std::int64_t>();
}

GradingGroup parse_group(const json& g) {
  int free_rank = static_cast<int>(as_int(require(g, "free_rank", "group"), "group.free_rank"));
  if (free_rank < 0) throw StructuralError("group.free_rank must be nonnegative");
  std::vector<std::int64_t> torsion;
  if (g.contains("torsion")) {
    if (!g.at("torsion").is_array()) throw StructuralError("group.torsion must be an array");
    for (const auto& m : g.at("torsion")) torsion.push_back(as_int(m, "group.torsion"));
  }
  return GradingGroup(free_rank, std::move(torsion));
}

Bicharacter parse_bicharacter(const json& b) {
  const json& rows = require(b, "exponent_matrix", "bicharacter");
  if (!rows.is_array()) throw StructuralError("bicharacter.exponent_matrix must be an array");
  std::vector<std::vector<std::int64_t>> m;
  for (const auto& row : rows) {
    if (!row.is_array()) throw StructuralError("bicharacter.exponent_matrix rows must be arrays");
    std::vector<std::int64_t> r;
    for (const auto& x : row) r.push_back(as_int(x, "bicharacter.exponent_matrix"));
    m.push_back(std::move(r));
  }
  return Bicharacter(std::move(m));
}

Vector parse_vector(const GradedSpace& space, const json& obj, const std::string& where) {
  if (!obj.is_object()) throw StructuralError(where + ": result must be an object {basis name: coefficient}");
  Vector v;
  for (const auto& [name, coeff] : obj.items()) {
    auto idx = space.find(name);
    if (!idx) throw StructuralError(where + ": unknown basis element '" + name + "'");
    v.add(*idx, parse_rational_json(coeff, where));
  }
  return v;
}

Product parse_product(const json& p, const GradedSpace& space, const Bicharacter& eps, std::size_t k) {
  std::string where = "products[" + std::to_string(k) + "]";
  const json& name = require(p, "name", where);
  if (!name.is_string()) throw StructuralError(where + ".name must be a string");
  Product prod(name.get<std::string>());
  where = "product '" + prod.name() + "'";
  bool skew = p.value("skew_complete", false);

  auto index = [&](const json& e, const char* key, const std::string& at) {
    const json& n = require(e, key, at);
    if (!n.is_string()) throw StructuralError(at + ": \"" + key + "\" must be a basis name");
    auto idx = space.find(n.get<std::string>());
    if (!idx) throw StructuralError(at + ": unknown basis element '" + n.get<std::string>() + "'");
    return *idx;
  };

  std::map<std::pair<std::size_t, std::size_t>, Vector> given;
  if (p.contains("entries")) {
    const json& entries = p.at("entries");
    if (!entries.is_array()) throw StructuralError(where + ": entries must be an array");
    for (std::size_t n = 0; n < entries.size(); ++n) {
      std::string at = where + " entry " + std::to_string(n);
      const json& e = entries[n];
      std::size_t i = index(e, "left", at);
      std::size_t j = index(e, "right", at);
      Vector v = parse_vector(space, require(e, "result", at), at);
      if (given.count({i, j}))
        throw StructuralError(at + ": duplicate entry for (" + space.name(i) + ", " + space.name(j) + ")");
      given[{i, j}] = std::move(v);
    }
  }

  for (const auto& [key, v] : given) prod.set(key.first, key.second, v);
  if (skew) {
    for (const auto& [key, v] : given) {
      auto [i, j] = key;
      if (i == j) {
        if (eps(space.degree(i), space.degree(i)) == 1 && !v.is_zero())
          throw StructuralError(where + ": skew_complete forces (" + space.name(i) + ", " + space.name(i) +
                                ") to vanish");
        continue;
      }
      Vector mirrored = Rational(-eps(space.degree(i), space.degree(j))) * v;
      auto it = given.find({j, i});
      if (it != given.end()) {
        if (!(it->second == mirrored))
          throw StructuralError(where + ": skew_complete conflicts with the given entry (" + space.name(j) + ", " +
                                space.name(i) + ")");
        continue;
      }
      prod.set(j, i, mirrored);
    }
  }
  return prod;
}

}  // namespace

json render_rational(const Rational& q) { return to_string(q); }

Rational parse_rational_json(const json& value, const std::string& where) {
  if (value.is_string()) {
    try {
      return parse_rational(value.get<std::string>());
    } catch (const StructuralError& e) {
      throw StructuralError(where + ": " + e.what());
    }
  }
  if (value.is_number_integer()) {
    if (value.is_number_unsigned()) return Rational(mpz_class(std::to_string(value.get<std::uint64_t>())));
    return Rational(mpz_class(std::to_string(value.get<std::int64_t>())));
  }
  if (value.is_number_float())
    throw StructuralError(where + ": floating-point coefficient rejected; write it as a string such as \"3/2\"");
  throw StructuralError(where + ": expected a rational");
}

LinearMap parse_matrix(const json& rows, std::size_t dim, const std::string& where) {
  if (!rows.is_array() || rows.size() != dim)
    throw StructuralError(where + ": expected a " + std::to_string(dim) + "x" + std::to_string(dim) + " matrix");
  std::vector<std::vector<Rational>> m;
  for (std::size_t i = 0; i < dim; ++i) {
    if (!rows[i].is_array() || rows[i].size() != dim)
      throw StructuralError(where + ": row " + std::to_string(i) + " must have " + std::to_string(dim) + " entries");
    std::vector<Rational> r;
    for (const auto& x : rows[i]) r.push_back(parse_rational_json(x, where));
    m.push_back(std::move(r));
  }
  return LinearMap::from_matrix(m, dim);
}

AlgebraDocument parse_document(const json& doc) {
  if (!doc.is_object()) throw StructuralError("algebra document must be a JSON object");
  GradingGroup group = parse_group(require(doc, "group", "document"));
  Bicharacter eps = doc.contains("bicharacter") ? parse_bicharacter(doc.at("bicharacter"))
                                                : Bicharacter::trivial(group.rank());

  const json& basis_json = require(doc, "basis", "document");
  if (!basis_json.is_array()) throw StructuralError("basis must be an array");
  if (basis_json.empty()) throw StructuralError("basis is empty: dimension 0 is not supported");
  std::vector<BasisElement> basis;
  for (std::size_t i = 0; i < basis_json.size(); ++i) {
    std::string where = "basis[" + std::to_string(i) + "]";
    const json& b = basis_json[i];
    const json& name = require(b, "name", where);
    if (!name.is_string()) throw StructuralError(where + ".name must be a string");
    const json& deg = require(b, "degree", where);
    std::vector<std::int64_t> coords;
    if (deg.is_array()) {
      for (const auto& c : deg) coords.push_back(as_int(c, where + ".degree"));
    } else {
      coords.push_back(as_int(deg, where + ".degree"));
    }
    if (coords.size() != group.rank())
      throw StructuralError(where + ".degree has " + std::to_string(coords.size()) + " coordinates, group rank is " +
                            std::to_string(group.rank()));
    basis.push_back({name.get<std::string>(), group.degree(std::move(coords))});
  }
  GradedSpace space(group, std::move(basis));

  std::vector<Product> products;
  if (doc.contains("products")) {
    if (!doc.at("products").is_array()) throw StructuralError("products must be an array");
    for (std::size_t k = 0; k < doc.at("products").size(); ++k)
      products.push_back(parse_product(doc.at("products")[k], space, eps, k));
  }

  LinearMap alpha = doc.contains("alpha") ? parse_matrix(doc.at("alpha"), space.dimension(), "alpha")
                                          : LinearMap::identity(space.dimension());
  std::map<std::string, LinearMap> maps;
  if (doc.contains("maps")) {
    if (!doc.at("maps").is_object()) throw StructuralError("maps must be an object");
    for (const auto& [name, m] : doc.at("maps").items())
      maps.emplace(name, parse_matrix(m, space.dimension(), "maps." + name));
  }

  AlgebraDocument out;
  out.algebra = HomAlgebra(std::move(space), std::move(products), std::move(alpha), std::move(eps), std::move(maps));
  if (doc.contains("description") && doc.at("description").is_string())
    out.description = doc.at("description").get<std::string>();
  if (doc.contains("expected")) {
    if (!doc.at("expected").is_array()) throw StructuralError("expected must be an array");
    out.expected = doc.at("expected");
  }
  if (doc.contains("provenance")) out.provenance = doc.at("provenance");
  return out;
}

AlgebraDocument load_document(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw StructuralError(std::string("invalid JSON: ") + e.what());
  }
  return parse_document(doc);
}

AlgebraDocument load_document_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw StructuralError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return load_document(ss.str());
}

HomAlgebra load_algebra(std::string_view text) { return load_document(text).algebra; }

json render_vector(const GradedSpace& space, const Vector& v) {
  json out = json::object();
  for (const auto& [i, c] : v.entries()) out[space.name(i)] = render_rational(c);
  return out;
}

json render_matrix(const LinearMap& m) {
  json rows = json::array();
  for (const auto& row : m.matrix()) {
    json r = json::array();
    for (const auto& x : row) r.push_back(render_rational(x));
    rows.push_back(std::move(r));
  }
  return rows;
}

json render_algebra(const HomAlgebra& alg) {
  const GradedSpace& space = alg.space();
  json doc;
  doc["group"] = {{"free_rank", alg.group().free_rank()}, {"torsion", alg.group().torsion()}};
  doc["bicharacter"] = {{"exponent_matrix", alg.eps().exponent_matrix()}};
  json basis = json::array();
  for (const auto& b : space.basis()) basis.push_back({{"name", b.name}, {"degree", b.degree.coords}});
  doc["basis"] = std::move(basis);
  json products = json::array();
  for (const auto& p : alg.products()) {
    json entries = json::array();
    for (const auto& [key, v] : p.table())
      entries.push_back(
          {{"left", space.name(key.first)}, {"right", space.name(key.second)}, {"result", render_vector(space, v)}});
    products.push_back({{"name", p.name()}, {"entries", std::move(entries)}});
  }
  doc["products"] = std::move(products);
  doc["alpha"] = render_matrix(alg.alpha());
  json maps = json::object();
  for (const auto& [name, m] : alg.maps()) maps[name] = render_matrix(m);
  doc["maps"] = std::move(maps);
  return doc;
}

json render_document(const AlgebraDocument& doc) {
  json out = render_algebra(doc.algebra);
  if (!doc.description.empty()) out["description"] = doc.description;
  if (!doc.expected.empty()) out["expected"] = doc.expected;
  if (!doc.provenance.is_null()) out["provenance"] = doc.provenance;
  return out;
}

json render_report(const HomAlgebra& alg, const CheckReport& report) {
  json out = {{"passed", report.passed}, {"tuples_checked", report.tuples_checked}};
  if (report.witness) {
    const Witness& w = *report.witness;
    json tuple = json::array();
    for (auto i : w.tuple) tuple.push_back(i < alg.dimension() ? json(alg.space().name(i)) : json(i));
    out["witness"] = {{"identity", w.identity}, {"tuple", std::move(tuple)},
                      {"residual", render_vector(alg.space(), w.residual)}};
  }
  return out;
}

json render_suite_report(const HomAlgebra& alg, const SuiteReport& report) {
  json schemas = json::array();
  for (std::size_t k = 0; k < report.reports.size(); ++k) {
    json r = render_report(alg, report.reports[k]);
    if (k < report.schemas.size()) r["schema"] = report.schemas[k];
    schemas.push_back(std::move(r));
  }
  json out = {{"suite", report.suite}, {"passed", report.passed()}, {"binding", report.binding},
              {"schemas", std::move(schemas)}};
  if (const CheckReport* f = report.first_failure()) out["witness"] = render_report(alg, *f).at("witness");
  return out;
}

}  // namespace homcolor
