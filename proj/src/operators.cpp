#include "homcolor/operators.hpp"

#include <functional>

#include "homcolor/error.hpp"

namespace homcolor {

std::string to_string(OperatorKind::Tag tag) {
  switch (tag) {
    case OperatorKind::Tag::rota_baxter: return "rota_baxter";
    case OperatorKind::Tag::nijenhuis: return "nijenhuis";
    case OperatorKind::Tag::averaging: return "averaging";
    case OperatorKind::Tag::centroid: return "centroid";
  }
  return "?";
}

OperatorKind::Tag parse_operator_tag(const std::string& name) {
  if (name == "rota_baxter" || name == "rota-baxter") return OperatorKind::Tag::rota_baxter;
  if (name == "nijenhuis") return OperatorKind::Tag::nijenhuis;
  if (name == "averaging") return OperatorKind::Tag::averaging;
  if (name == "centroid") return OperatorKind::Tag::centroid;
  throw StructuralError("unknown operator kind '" + name + "'");
}

namespace {

// Residual of one identity at basis pair (i, j); zero means it holds there.
using PairResidual = std::function<Vector(const Product&, std::size_t, std::size_t)>;

struct NamedIdentity {
  std::string name;
  PairResidual residual;
};

bool scan_pairs(const HomAlgebra& alg, const std::vector<const Product*>& products,
                const std::vector<NamedIdentity>& identities, CheckReport& report) {
  for (const auto* p : products)
    for (const auto& id : identities)
      for (std::size_t i = 0; i < alg.dimension(); ++i)
        for (std::size_t j = 0; j < alg.dimension(); ++j) {
          ++report.tuples_checked;
          Vector r = id.residual(*p, i, j);
          if (!r.is_zero()) {
            report.passed = false;
            report.witness = Witness{id.name + "[" + p->name() + "]", {i, j}, std::move(r)};
            return false;
          }
        }
  return true;
}

bool scan_commutation(const LinearMap& f, const LinearMap& alpha_src, const LinearMap& alpha_dst,
                      CheckReport& report) {
  for (std::size_t i = 0; i < f.domain_dim(); ++i) {
    ++report.tuples_checked;
    Vector r = f(alpha_src.image(i)) - alpha_dst(f.image(i));
    if (!r.is_zero()) {
      report.passed = false;
      report.witness = Witness{"commutes-with-alpha", {i}, std::move(r)};
      return false;
    }
  }
  return true;
}

void require_even(const LinearMap& m, const GradedSpace& src, const GradedSpace& dst, const std::string& what) {
  if (m.domain_dim() != src.dimension() || m.codomain_dim() != dst.dimension())
    throw StructuralError(what + " has the wrong dimensions");
  if (auto j = first_odd_column(m, src, dst))
    throw StructuralError(what + " is not even: image of " + src.name(*j) + " leaves its degree");
}

}  // namespace

CheckReport check_operator(const HomAlgebra& alg, const OperatorKind& kind, const LinearMap& m,
                           const std::vector<std::string>& products) {
  require_even(m, alg.space(), alg.space(), "operator map");

  std::vector<const Product*> selected;
  if (products.empty())
    for (const auto& p : alg.products()) selected.push_back(&p);
  else
    for (const auto& name : products) selected.push_back(&alg.product(name));

  auto e = [](std::size_t i) { return Vector::basis(i); };
  const LinearMap& op = m;
  std::vector<NamedIdentity> ids;
  bool needs_alpha = true;

  switch (kind.tag) {
    case OperatorKind::Tag::rota_baxter: {
      Rational lambda = kind.weight;
      ids.push_back({"rota-baxter", [&, lambda](const Product& p, std::size_t i, std::size_t j) {
                       const Vector& ri = op.image(i);
                       const Vector& rj = op.image(j);
                       Vector inner = p(ri, e(j)) + p(e(i), rj);
                       inner.add_scaled(p.at(i, j), lambda);
                       return p(ri, rj) - op(inner);
                     }});
      break;
    }
    case OperatorKind::Tag::nijenhuis:
      ids.push_back({"nijenhuis", [&](const Product& p, std::size_t i, std::size_t j) {
                       const Vector& ni = op.image(i);
                       const Vector& nj = op.image(j);
                       Vector inner = p(ni, e(j)) + p(e(i), nj) - op(p.at(i, j));
                       return p(ni, nj) - op(inner);
                     }});
      break;
    case OperatorKind::Tag::averaging:
      ids.push_back({"averaging-left", [&](const Product& p, std::size_t i, std::size_t j) {
                       return op(p(op.image(i), e(j))) - p(op.image(i), op.image(j));
                     }});
      ids.push_back({"averaging-right", [&](const Product& p, std::size_t i, std::size_t j) {
                       return p(op.image(i), op.image(j)) - op(p(e(i), op.image(j)));
                     }});
      break;
    case OperatorKind::Tag::centroid:
      needs_alpha = false;
      ids.push_back({"centroid-left", [&](const Product& p, std::size_t i, std::size_t j) {
                       return op(p.at(i, j)) - p(op.image(i), e(j));
                     }});
      ids.push_back({"centroid-right", [&](const Product& p, std::size_t i, std::size_t j) {
                       return p(op.image(i), e(j)) - p(e(i), op.image(j));
                     }});
      break;
  }

  CheckReport report;
  if (!scan_pairs(alg, selected, ids, report)) return report;
  if (needs_alpha) scan_commutation(m, alg.alpha(), alg.alpha(), report);
  return report;
}

CheckReport check_morphism(const HomAlgebra& src, const HomAlgebra& dst, const LinearMap& f) {
  if (!(src.group() == dst.group())) throw StructuralError("morphism between algebras graded by different groups");
  if (!(src.eps() == dst.eps())) throw StructuralError("morphism between algebras with different bicharacters");
  if (src.products().size() != dst.products().size())
    throw StructuralError("morphism between algebras with " + std::to_string(src.products().size()) + " and " +
                          std::to_string(dst.products().size()) + " products");
  require_even(f, src.space(), dst.space(), "morphism");

  CheckReport report;
  for (std::size_t k = 0; k < src.products().size(); ++k) {
    const Product& mu = src.products()[k];
    const Product& nu = dst.products()[k];
    for (std::size_t i = 0; i < src.dimension(); ++i)
      for (std::size_t j = 0; j < src.dimension(); ++j) {
        ++report.tuples_checked;
        Vector r = f(mu.at(i, j)) - nu(f.image(i), f.image(j));
        if (!r.is_zero()) {
          report.passed = false;
          report.witness = Witness{"morphism[" + mu.name() + "]", {i, j}, std::move(r)};
          return report;
        }
      }
  }
  scan_commutation(f, src.alpha(), dst.alpha(), report);
  return report;
}

}  // namespace homcolor
