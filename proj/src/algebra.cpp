#include "homcolor/algebra.hpp"

#include <set>

#include "homcolor/error.hpp"

namespace homcolor {

// ---- Vector ----------------------------------------------------------------

Vector Vector::basis(std::size_t index, const Rational& coeff) {
  Vector v;
  v.add(index, coeff);
  return v;
}

Rational Vector::coeff(std::size_t index) const {
  auto it = coeffs_.find(index);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void Vector::add(std::size_t index, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(index, c);
  if (inserted) {
    it->second.canonicalize();
    return;
  }
  it->second += c;
  it->second.canonicalize();
  if (it->second == 0) coeffs_.erase(it);
}

void Vector::add_scaled(const Vector& v, const Rational& c) {
  if (c == 0) return;
  for (const auto& [i, a] : v.coeffs_) add(i, c * a);
}

Vector& Vector::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [i, a] : coeffs_) {
    a *= c;
    a.canonicalize();
  }
  return *this;
}

// ---- GradedSpace -----------------------------------------------------------

GradedSpace::GradedSpace(GradingGroup group, std::vector<BasisElement> basis)
    : group_(std::move(group)), basis_(std::move(basis)) {
  std::set<std::string> seen;
  for (const auto& b : basis_) {
    if (b.name.empty()) throw StructuralError("basis names must be nonempty");
    if (!seen.insert(b.name).second) throw StructuralError("duplicate basis name '" + b.name + "'");
    if (!group_.contains(b.degree))
      throw StructuralError("degree " + to_string(b.degree) + " of '" + b.name + "' is not a reduced group element");
  }
}

std::optional<std::size_t> GradedSpace::find(const std::string& name) const {
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i].name == name) return i;
  return std::nullopt;
}

std::size_t GradedSpace::index_of(const std::string& name) const {
  if (auto i = find(name)) return *i;
  throw StructuralError("unknown basis name '" + name + "'");
}

std::optional<Degree> GradedSpace::homogeneous_degree(const Vector& v) const {
  std::optional<Degree> d;
  for (const auto& [i, c] : v.entries()) {
    if (i >= dimension()) return std::nullopt;
    if (!d) d = degree(i);
    else if (*d != degree(i)) return std::nullopt;
  }
  return d;
}

// ---- Product ---------------------------------------------------------------

Product::Product(std::string name, Table table) : name_(std::move(name)) {
  for (auto& [key, v] : table) set(key.first, key.second, std::move(v));
}

const Vector& Product::at(std::size_t i, std::size_t j) const {
  static const Vector kZero;
  auto it = table_.find({i, j});
  return it == table_.end() ? kZero : it->second;
}

void Product::set(std::size_t i, std::size_t j, Vector v) {
  if (v.is_zero()) table_.erase({i, j});
  else table_[{i, j}] = std::move(v);
}

Vector Product::operator()(const Vector& v, const Vector& w) const {
  Vector out;
  for (const auto& [i, a] : v.entries())
    for (const auto& [j, b] : w.entries()) {
      auto it = table_.find({i, j});
      if (it != table_.end()) out.add_scaled(it->second, a * b);
    }
  return out;
}

// ---- LinearMap -------------------------------------------------------------

LinearMap::LinearMap(std::vector<Vector> images, std::size_t codomain_dim)
    : images_(std::move(images)), codomain_dim_(codomain_dim) {
  for (const auto& v : images_)
    if (v.support_bound() > codomain_dim_) throw StructuralError("linear map image outside the codomain");
}

LinearMap LinearMap::identity(std::size_t n) { return scalar(1, n); }

LinearMap LinearMap::zero(std::size_t domain_dim, std::size_t codomain_dim) {
  return LinearMap(std::vector<Vector>(domain_dim), codomain_dim);
}

LinearMap LinearMap::scalar(const Rational& c, std::size_t n) {
  std::vector<Vector> images;
  images.reserve(n);
  for (std::size_t i = 0; i < n; ++i) images.push_back(Vector::basis(i, c));
  return LinearMap(std::move(images), n);
}

LinearMap LinearMap::from_matrix(const std::vector<std::vector<Rational>>& rows, std::size_t domain_dim) {
  std::vector<Vector> images(domain_dim);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != domain_dim) throw StructuralError("matrix row " + std::to_string(i) + " has wrong length");
    for (std::size_t j = 0; j < domain_dim; ++j) images[j].add(i, rows[i][j]);
  }
  return LinearMap(std::move(images), rows.size());
}

std::vector<std::vector<Rational>> LinearMap::matrix() const {
  std::vector<std::vector<Rational>> rows(codomain_dim_, std::vector<Rational>(domain_dim(), 0));
  for (std::size_t j = 0; j < domain_dim(); ++j)
    for (const auto& [i, c] : images_[j].entries()) rows[i][j] = c;
  return rows;
}

Vector LinearMap::operator()(const Vector& v) const {
  Vector out;
  for (const auto& [j, c] : v.entries()) {
    if (j >= images_.size()) throw StructuralError("vector does not fit the map's domain");
    out.add_scaled(images_[j], c);
  }
  return out;
}

LinearMap compose(const LinearMap& f, const LinearMap& g) {
  if (g.codomain_dim() != f.domain_dim()) throw StructuralError("cannot compose maps of incompatible dimensions");
  std::vector<Vector> images;
  images.reserve(g.domain_dim());
  for (const auto& v : g.images()) images.push_back(f(v));
  return LinearMap(std::move(images), f.codomain_dim());
}

LinearMap power(const LinearMap& m, unsigned k) {
  if (m.domain_dim() != m.codomain_dim()) throw StructuralError("power of a non-square map");
  LinearMap result = LinearMap::identity(m.domain_dim());
  LinearMap base = m;
  while (k > 0) {
    if (k & 1u) result = compose(base, result);
    k >>= 1u;
    if (k) base = compose(base, base);
  }
  return result;
}

LinearMap operator+(const LinearMap& f, const LinearMap& g) {
  if (f.domain_dim() != g.domain_dim() || f.codomain_dim() != g.codomain_dim())
    throw StructuralError("cannot add maps of different shapes");
  std::vector<Vector> images = f.images();
  for (std::size_t j = 0; j < images.size(); ++j) images[j] += g.image(j);
  return LinearMap(std::move(images), f.codomain_dim());
}

LinearMap operator*(const Rational& c, const LinearMap& f) {
  std::vector<Vector> images = f.images();
  for (auto& v : images) v *= c;
  return LinearMap(std::move(images), f.codomain_dim());
}

std::optional<std::size_t> first_odd_column(const LinearMap& m, const GradedSpace& src, const GradedSpace& dst) {
  if (m.domain_dim() != src.dimension() || m.codomain_dim() != dst.dimension())
    throw StructuralError("map dimensions do not match the spaces");
  for (std::size_t j = 0; j < m.domain_dim(); ++j)
    for (const auto& [i, c] : m.image(j).entries())
      if (dst.degree(i) != src.degree(j)) return j;
  return std::nullopt;
}

bool is_even(const LinearMap& m, const GradedSpace& src, const GradedSpace& dst) {
  return !first_odd_column(m, src, dst).has_value();
}

// ---- HomAlgebra ------------------------------------------------------------

HomAlgebra::HomAlgebra(GradedSpace space, std::vector<Product> products, LinearMap alpha, Bicharacter eps,
                       std::map<std::string, LinearMap> maps)
    : space_(std::move(space)),
      products_(std::move(products)),
      alpha_(std::move(alpha)),
      eps_(std::move(eps)),
      maps_(std::move(maps)) {
  validate();
}

void HomAlgebra::validate() const {
  const auto n = dimension();
  if (n == 0) throw StructuralError("algebra has dimension 0");
  auto report = validate_bicharacter(eps_, group());
  if (!report.passed) {
    std::string w;
    for (const auto& d : report.witness) w += (w.empty() ? "" : ", ") + to_string(d);
    throw StructuralError("invalid bicharacter: " + report.axiom + " fails at " + w);
  }

  std::set<std::string> names;
  for (const auto& p : products_) {
    if (p.name().empty()) throw StructuralError("product names must be nonempty");
    if (!names.insert(p.name()).second) throw StructuralError("duplicate product name '" + p.name() + "'");
    for (const auto& [key, v] : p.table()) {
      const auto [i, j] = key;
      if (i >= n || j >= n || v.support_bound() > n)
        throw StructuralError("product '" + p.name() + "' refers to a basis index out of range");
      auto target = group().add(degree(i), degree(j));
      for (const auto& [k, c] : v.entries())
        if (degree(k) != target)
          throw StructuralError("evenness violation in product '" + p.name() + "': " + space_.name(i) + " * " +
                                space_.name(j) + " has a component on " + space_.name(k) + " of degree " +
                                to_string(degree(k)) + ", expected " + to_string(target));
    }
  }

  auto check_map = [&](const LinearMap& m, const std::string& what) {
    if (m.domain_dim() != n || m.codomain_dim() != n) throw StructuralError(what + " has the wrong dimensions");
    if (auto j = first_odd_column(m, space_, space_))
      throw StructuralError(what + " is not even: image of " + space_.name(*j) + " leaves its degree");
  };
  check_map(alpha_, "alpha");
  for (const auto& [name, m] : maps_) check_map(m, "map '" + name + "'");
}

bool HomAlgebra::has_product(const std::string& name) const {
  for (const auto& p : products_)
    if (p.name() == name) return true;
  return false;
}

const Product& HomAlgebra::product(const std::string& name) const {
  for (const auto& p : products_)
    if (p.name() == name) return p;
  throw StructuralError("unknown product '" + name + "'");
}

HomAlgebra HomAlgebra::with_products(std::vector<Product> products) const {
  return HomAlgebra(space_, std::move(products), alpha_, eps_, maps_);
}

HomAlgebra HomAlgebra::with_alpha(LinearMap alpha) const {
  return HomAlgebra(space_, products_, std::move(alpha), eps_, maps_);
}

HomAlgebra HomAlgebra::with_maps(std::map<std::string, LinearMap> maps) const {
  return HomAlgebra(space_, products_, alpha_, eps_, std::move(maps));
}

Vector product_eval(const HomAlgebra& alg, const std::string& product, const Vector& v, const Vector& w) {
  const auto n = alg.dimension();
  if (v.support_bound() > n || w.support_bound() > n) throw StructuralError("vector does not fit the algebra");
  return alg.product(product)(v, w);
}

Vector map_apply(const LinearMap& m, const Vector& v) { return m(v); }

}  // namespace homcolor
