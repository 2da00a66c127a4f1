#pragma once

#include <string>
#include <vector>

#include "homcolor/identity.hpp"

namespace homcolor {

struct OperatorKind {
  enum class Tag { rota_baxter, nijenhuis, averaging, centroid };

  Tag tag = Tag::centroid;
  Rational weight = 0;  ///< meaningful for rota_baxter only

  static OperatorKind rota_baxter(const Rational& weight) { return {Tag::rota_baxter, weight}; }
  static OperatorKind nijenhuis() { return {Tag::nijenhuis, 0}; }
  static OperatorKind averaging() { return {Tag::averaging, 0}; }
  static OperatorKind centroid() { return {Tag::centroid, 0}; }

  friend bool operator==(const OperatorKind&, const OperatorKind&) = default;
};

std::string to_string(OperatorKind::Tag tag);
/// Accepts "rota_baxter" (also "rota-baxter"), "nijenhuis", "averaging", "centroid".
OperatorKind::Tag parse_operator_tag(const std::string& name);

/// Checks the operator identity on all basis pairs for each product in `products`
/// (all products when empty). Rota-Baxter, Nijenhuis and averaging operators must
/// also commute with alpha; centroid elements need not.
/// Throws StructuralError for an odd map or mismatched dimensions.
CheckReport check_operator(const HomAlgebra& alg, const OperatorKind& kind, const LinearMap& m,
                           const std::vector<std::string>& products = {});

/// f(mu_k(x,y)) = mu'_k(f(x), f(y)) for products paired by position, and f∘alpha = alpha'∘f.
/// Throws StructuralError on group/bicharacter/product-count mismatch or an odd f.
CheckReport check_morphism(const HomAlgebra& src, const HomAlgebra& dst, const LinearMap& f);

}  // namespace homcolor
