#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "homcolor/algebra.hpp"

namespace homcolor {

enum class Var : std::uint8_t { x = 0, y = 1, z = 2 };

char var_name(Var v);

/// eps(sum of left degrees, sum of right degrees)
struct EpsFactor {
  std::vector<Var> left;
  std::vector<Var> right;

  friend bool operator==(const EpsFactor&, const EpsFactor&) = default;
};

/// One of
///   flat:          outer(p, q)
///   nested_left:   outer(inner(p, q), a^e(r))
///   nested_right:  outer(a^e(p), inner(q, r))
/// `leaves` lists the variables left to right; `twisted` is e = 1.
struct Pattern {
  enum class Shape : std::uint8_t { flat, nested_left, nested_right };

  Shape shape = Shape::flat;
  std::string outer;
  std::string inner;
  std::vector<Var> leaves;
  bool twisted = false;

  friend bool operator==(const Pattern&, const Pattern&) = default;
};

struct Term {
  Rational coeff = 1;
  std::vector<EpsFactor> eps;
  Pattern pattern;

  friend bool operator==(const Term&, const Term&) = default;
};

/// A multilinear identity "sum of terms = 0" in 2 or 3 variables.
struct IdentitySchema {
  std::string name;
  int arity = 2;
  std::vector<Term> terms;

  std::set<std::string> product_names() const;

  friend bool operator==(const IdentitySchema&, const IdentitySchema&) = default;
};

IdentitySchema parse_identity(std::string_view text, std::string name = {});
std::string render_identity(const IdentitySchema& schema);

/// Slot (or product) name -> product name in the algebra. Unbound names map to themselves.
using Binding = std::map<std::string, std::string>;

/// Renames the product names used by `schema` through `binding`.
IdentitySchema rebind(const IdentitySchema& schema, const Binding& binding);

struct Witness {
  std::string identity;
  std::vector<std::size_t> tuple;
  Vector residual;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct CheckReport {
  bool passed = true;
  std::optional<Witness> witness;
  std::size_t tuples_checked = 0;

  friend bool operator==(const CheckReport&, const CheckReport&) = default;
};

/// Evaluates the schema on every basis tuple in lexicographic order and stops at the
/// first nonzero residual.
CheckReport evaluate_identity(const HomAlgebra& alg, const IdentitySchema& schema, const Binding& binding = {});

/// Residual of the schema on homogeneous arguments. Zero arguments are allowed;
/// mixed-degree arguments throw StructuralError.
Vector evaluate_at(const HomAlgebra& alg, const IdentitySchema& schema, std::span<const Vector> args,
                   const Binding& binding = {});

}  // namespace homcolor
