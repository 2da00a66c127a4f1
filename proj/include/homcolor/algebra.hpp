#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "homcolor/grading.hpp"
#include "homcolor/rational.hpp"

namespace homcolor {

/// Sparse vector over the basis of a GradedSpace. Zero coefficients are never stored.
class Vector {
 public:
  using Storage = std::map<std::size_t, Rational>;

  Vector() = default;
  static Vector basis(std::size_t index, const Rational& coeff = 1);

  const Storage& entries() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  Rational coeff(std::size_t index) const;
  /// Largest stored basis index plus one (0 for the zero vector).
  std::size_t support_bound() const noexcept { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first + 1; }

  /// this += c * e_index
  void add(std::size_t index, const Rational& c);
  /// this += c * v
  void add_scaled(const Vector& v, const Rational& c);

  Vector& operator+=(const Vector& v) { add_scaled(v, 1); return *this; }
  Vector& operator-=(const Vector& v) { add_scaled(v, -1); return *this; }
  Vector& operator*=(const Rational& c);

  friend Vector operator+(Vector a, const Vector& b) { return a += b; }
  friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
  friend Vector operator*(const Rational& c, Vector v) { return v *= c; }
  friend Vector operator-(Vector v) { return v *= -1; }
  friend bool operator==(const Vector&, const Vector&) = default;

 private:
  Storage coeffs_;
};

struct BasisElement {
  std::string name;
  Degree degree;

  friend bool operator==(const BasisElement&, const BasisElement&) = default;
};

class GradedSpace {
 public:
  GradedSpace() = default;
  /// Throws StructuralError on duplicate names or degrees outside the group.
  GradedSpace(GradingGroup group, std::vector<BasisElement> basis);

  const GradingGroup& group() const noexcept { return group_; }
  const std::vector<BasisElement>& basis() const noexcept { return basis_; }
  std::size_t dimension() const noexcept { return basis_.size(); }
  const Degree& degree(std::size_t i) const { return basis_.at(i).degree; }
  const std::string& name(std::size_t i) const { return basis_.at(i).name; }
  std::optional<std::size_t> find(const std::string& name) const;
  std::size_t index_of(const std::string& name) const;

  /// The common degree of all supported basis vectors; nullopt for zero or mixed vectors.
  std::optional<Degree> homogeneous_degree(const Vector& v) const;

  friend bool operator==(const GradedSpace&, const GradedSpace&) = default;

 private:
  GradingGroup group_;
  std::vector<BasisElement> basis_;
};

/// Even bilinear product stored as structure constants; absent pairs are zero.
class Product {
 public:
  using Table = std::map<std::pair<std::size_t, std::size_t>, Vector>;

  Product() = default;
  explicit Product(std::string name) : name_(std::move(name)) {}
  Product(std::string name, Table table);

  const std::string& name() const noexcept { return name_; }
  void rename(std::string name) { name_ = std::move(name); }
  const Table& table() const noexcept { return table_; }

  const Vector& at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, Vector v);

  /// Bilinear extension of the table.
  Vector operator()(const Vector& v, const Vector& w) const;

  friend bool operator==(const Product&, const Product&) = default;

 private:
  std::string name_;
  Table table_;
};

/// Linear map given by the images of the domain basis; images live in a space of
/// dimension `codomain_dim`.
class LinearMap {
 public:
  LinearMap() = default;
  LinearMap(std::vector<Vector> images, std::size_t codomain_dim);

  static LinearMap identity(std::size_t n);
  static LinearMap zero(std::size_t domain_dim, std::size_t codomain_dim);
  static LinearMap scalar(const Rational& c, std::size_t n);
  /// rows[i][j] = coefficient of basis i in the image of basis j.
  static LinearMap from_matrix(const std::vector<std::vector<Rational>>& rows, std::size_t domain_dim);

  std::size_t domain_dim() const noexcept { return images_.size(); }
  std::size_t codomain_dim() const noexcept { return codomain_dim_; }
  const std::vector<Vector>& images() const noexcept { return images_; }
  const Vector& image(std::size_t j) const { return images_.at(j); }
  std::vector<std::vector<Rational>> matrix() const;

  Vector operator()(const Vector& v) const;

  friend bool operator==(const LinearMap&, const LinearMap&) = default;

 private:
  std::vector<Vector> images_;
  std::size_t codomain_dim_ = 0;
};

/// f ∘ g
LinearMap compose(const LinearMap& f, const LinearMap& g);
/// m^k for an endomorphism; m^0 is the identity.
LinearMap power(const LinearMap& m, unsigned k);
LinearMap operator+(const LinearMap& f, const LinearMap& g);
LinearMap operator*(const Rational& c, const LinearMap& f);

/// True iff every image of a degree-g basis vector is supported in degree g of `dst`.
bool is_even(const LinearMap& m, const GradedSpace& src, const GradedSpace& dst);
/// Offending basis index, or nullopt when the map is even.
std::optional<std::size_t> first_odd_column(const LinearMap& m, const GradedSpace& src, const GradedSpace& dst);

/// Color Hom-algebra (A, mu_1..mu_n, eps, alpha) plus named auxiliary maps (e.g. "R").
class HomAlgebra {
 public:
  HomAlgebra() = default;
  /// Validates evenness of every product and of alpha, and the bicharacter.
  HomAlgebra(GradedSpace space, std::vector<Product> products, LinearMap alpha, Bicharacter eps,
             std::map<std::string, LinearMap> maps = {});

  const GradedSpace& space() const noexcept { return space_; }
  const GradingGroup& group() const noexcept { return space_.group(); }
  std::size_t dimension() const noexcept { return space_.dimension(); }
  const Degree& degree(std::size_t i) const { return space_.degree(i); }
  const std::vector<Product>& products() const noexcept { return products_; }
  const LinearMap& alpha() const noexcept { return alpha_; }
  const Bicharacter& eps() const noexcept { return eps_; }
  const std::map<std::string, LinearMap>& maps() const noexcept { return maps_; }

  bool has_product(const std::string& name) const;
  const Product& product(const std::string& name) const;
  /// eps(deg e_i, deg e_j)
  int sign(std::size_t i, std::size_t j) const { return eps_(degree(i), degree(j)); }

  /// Copies with one component replaced; the result is re-validated.
  HomAlgebra with_products(std::vector<Product> products) const;
  HomAlgebra with_alpha(LinearMap alpha) const;
  HomAlgebra with_maps(std::map<std::string, LinearMap> maps) const;

  friend bool operator==(const HomAlgebra&, const HomAlgebra&) = default;

 private:
  void validate() const;

  GradedSpace space_;
  std::vector<Product> products_;
  LinearMap alpha_;
  Bicharacter eps_;
  std::map<std::string, LinearMap> maps_;
};

/// Throws StructuralError for an unknown product name.
Vector product_eval(const HomAlgebra& alg, const std::string& product, const Vector& v, const Vector& w);
/// Throws StructuralError when the vector does not fit the domain.
Vector map_apply(const LinearMap& m, const Vector& v);

/// Builds a product table from a function of basis indices.
template <class F>
Product tabulate(std::string name, std::size_t dim, F&& f) {
  Product p(std::move(name));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) p.set(i, j, f(i, j));
  return p;
}

}  // namespace homcolor
