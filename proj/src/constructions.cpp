#include "homcolor/constructions.hpp"

#include <algorithm>
#include <set>

#include "homcolor/error.hpp"

namespace homcolor {

namespace {

Vector e(std::size_t i) { return Vector::basis(i); }

void require_suite(const HomAlgebra& alg, const std::string& what, const std::string& suite, const Binding& binding) {
  SuiteReport r = check_suite(alg, suite, binding);
  if (!r.passed()) throw PreconditionError(what, render_suite_report(alg, r).dump());
}

void require_report(const HomAlgebra& alg, const std::string& what, const CheckReport& r) {
  if (!r.passed) throw PreconditionError(what, render_report(alg, r).dump());
}

/// The product playing the single-product role: explicit "mu" binding, the only product,
/// or a product named "mu".
const Product& sole_product(const HomAlgebra& alg, const std::string& op, const Binding& given) {
  if (auto it = given.find("mu"); it != given.end()) return alg.product(it->second);
  if (alg.products().size() == 1) return alg.products().front();
  if (alg.has_product("mu")) return alg.product("mu");
  throw StructuralError(op + " needs a single product (found " + std::to_string(alg.products().size()) +
                        "); bind one with mu=NAME");
}

HomAlgebra single(const HomAlgebra& alg, Product p) {
  p.rename("mu");
  return alg.with_products({std::move(p)});
}

const std::vector<std::string> kTriSlots{"ladj", "radj", "dot"};
const std::vector<std::string> kDiSlots{"ladj", "radj"};
const std::vector<std::string> kPostLieSlots{"br", "dot"};

struct Roles {
  std::vector<const Product*> p;
  Binding binding;
};

Roles roles(const HomAlgebra& alg, const std::vector<std::string>& slots, const Binding& given) {
  Roles r;
  r.binding = resolve_binding(alg, slots, given);
  for (const auto& s : slots) r.p.push_back(&alg.product(r.binding.at(s)));
  return r;
}

json params_with_inputs(const std::string& name, json parameters, const std::vector<const HomAlgebra*>& inputs,
                        const ConstructionOptions& opt) {
  json in = json::array();
  for (const auto* a : inputs) in.push_back(render_algebra(*a));
  json out = {{"construction", name}, {"parameters", std::move(parameters)}, {"inputs", std::move(in)}};
  if (!opt.input_binding.empty()) out["input_binding"] = opt.input_binding;
  return out;
}

ConstructionResult finish(HomAlgebra out, json provenance, std::string suite, Binding binding,
                          const ConstructionOptions& opt) {
  ConstructionResult r{std::move(out), std::move(provenance), std::move(suite), std::move(binding), std::nullopt};
  if (opt.verify_result && !r.expected_suite.empty())
    r.verification = check_suite(r.algebra, r.expected_suite, r.expected_binding);
  return r;
}

Binding identity_binding(const std::vector<std::string>& slots) {
  Binding b;
  for (const auto& s : slots) b[s] = s;
  return b;
}

Product renamed(Product p, std::string name) {
  p.rename(std::move(name));
  return p;
}

/// Products of `alg` composed with `m` on the left: m∘mu.
std::vector<Product> compose_products(const HomAlgebra& alg, const LinearMap& m) {
  std::vector<Product> out;
  for (const auto& p : alg.products())
    out.push_back(tabulate(p.name(), alg.dimension(), [&](std::size_t i, std::size_t j) { return m(p.at(i, j)); }));
  return out;
}

void require_even_map(const HomAlgebra& alg, const LinearMap& m, const std::string& what) {
  if (m.domain_dim() != alg.dimension() || m.codomain_dim() != alg.dimension())
    throw StructuralError(what + " has the wrong dimensions");
  if (auto j = first_odd_column(m, alg.space(), alg.space()))
    throw StructuralError(what + " is not even: image of " + alg.space().name(*j) + " leaves its degree");
}

}  // namespace

ConstructionResult tensor_product(const HomAlgebra& a1, const HomAlgebra& a2, const ConstructionOptions& opt) {
  if (!(a1.group() == a2.group())) throw StructuralError("tensor_product: factors graded by different groups");
  if (!(a1.eps() == a2.eps())) throw StructuralError("tensor_product: factors use different bicharacters");
  if (a1.products().size() != 1 || a2.products().size() != 1)
    throw StructuralError("tensor_product: each factor must have exactly one product");
  const Product& p1 = a1.products().front();
  const Product& p2 = a2.products().front();

  std::string suite = "hom-associative-color";
  if (opt.check_preconditions) {
    HomAlgebra s1 = single(a1, p1), s2 = single(a2, p2);
    bool assoc1 = check_suite(s1, "hom-associative-color").passed();
    bool assoc2 = check_suite(s2, "hom-associative-color").passed();
    if (!(assoc1 && assoc2)) {
      require_suite(s1, "left factor is Hom-left-symmetric (or both factors Hom-associative)",
                    "hom-left-symmetric-color", {});
      require_suite(s2, "right factor is Hom-associative", "hom-associative-color", {});
      require_suite(s2, "right factor is eps-commutative", "eps-commutative", {});
      suite = "hom-left-symmetric-color";
    }
  }

  const std::size_t n1 = a1.dimension(), n2 = a2.dimension();
  auto idx = [n2](std::size_t i, std::size_t j) { return i * n2 + j; };
  std::vector<BasisElement> basis;
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t j = 0; j < n2; ++j)
      basis.push_back({a1.space().name(i) + "⊗" + a2.space().name(j), a1.group().add(a1.degree(i), a2.degree(j))});
  GradedSpace space(a1.group(), std::move(basis));

  auto tensor = [&](const Vector& u, const Vector& v) {
    Vector out;
    for (const auto& [k1, c1] : u.entries())
      for (const auto& [k2, c2] : v.entries()) out.add(idx(k1, k2), c1 * c2);
    return out;
  };

  Product mu("mu");
  for (std::size_t i1 = 0; i1 < n1; ++i1)
    for (std::size_t i2 = 0; i2 < n2; ++i2)
      for (std::size_t j1 = 0; j1 < n1; ++j1)
        for (std::size_t j2 = 0; j2 < n2; ++j2) {
          Vector v = tensor(p1.at(i1, j1), p2.at(i2, j2));
          if (v.is_zero()) continue;
          mu.set(idx(i1, i2), idx(j1, j2), Rational(a1.eps()(a2.degree(i2), a1.degree(j1))) * v);
        }
  std::vector<Vector> alpha;
  for (std::size_t i1 = 0; i1 < n1; ++i1)
    for (std::size_t i2 = 0; i2 < n2; ++i2) alpha.push_back(tensor(a1.alpha().image(i1), a2.alpha().image(i2)));

  HomAlgebra out(std::move(space), {std::move(mu)}, LinearMap(std::move(alpha), n1 * n2), a1.eps());
  return finish(std::move(out), params_with_inputs("tensor_product", json::object(), {&a1, &a2}, opt), suite,
                {{"mu", "mu"}}, opt);
}

ConstructionResult nijenhuis_deform(const HomAlgebra& alg, const LinearMap& n, bool compose_alpha,
                                    const ConstructionOptions& opt) {
  require_even_map(alg, n, "Nijenhuis map");
  const Product& mu = sole_product(alg, "nijenhuis_deform", opt.input_binding);
  HomAlgebra base = single(alg, mu);
  if (opt.check_preconditions) {
    if (compose_alpha) {
      require_suite(base.with_alpha(LinearMap::identity(alg.dimension())), "product is associative",
                    "hom-associative-color", {});
      require_report(base, "alpha is multiplicative", check_multiplicative(base));
    } else {
      require_suite(base, "input is Hom-associative", "hom-associative-color", {});
    }
    require_report(base, "N is a Nijenhuis operator commuting with alpha",
                   check_operator(base, OperatorKind::nijenhuis(), n));
  }
  Product deformed = tabulate("mu", alg.dimension(), [&](std::size_t i, std::size_t j) {
    Vector v = mu(n.image(i), e(j)) + mu(e(i), n.image(j)) - n(mu.at(i, j));
    return compose_alpha ? alg.alpha()(v) : v;
  });
  HomAlgebra out = alg.with_products({std::move(deformed)});
  json params = {{"map", render_matrix(n)}, {"compose_alpha", compose_alpha}};
  return finish(std::move(out), params_with_inputs("nijenhuis_deform", params, {&alg}, opt), "hom-associative-color",
                {{"mu", "mu"}}, opt);
}

ConstructionResult averaging_dialgebra(const HomAlgebra& alg, const LinearMap& beta, const ConstructionOptions& opt) {
  require_even_map(alg, beta, "averaging map");
  const Product& mu = sole_product(alg, "averaging_dialgebra", opt.input_binding);
  HomAlgebra base = single(alg, mu);
  if (opt.check_preconditions) {
    require_suite(base, "input is Hom-associative", "hom-associative-color", {});
    require_report(base, "beta is an averaging operator", check_operator(base, OperatorKind::averaging(), beta));
    require_suite(base.with_alpha(beta), "product is Hom-associative with twist beta", "hom-associative-color", {});
  }
  std::size_t d = alg.dimension();
  Product left = tabulate("ladj", d, [&](std::size_t i, std::size_t j) { return mu(e(i), beta.image(j)); });
  Product right = tabulate("radj", d, [&](std::size_t i, std::size_t j) { return mu(beta.image(i), e(j)); });
  HomAlgebra out = alg.with_products({std::move(left), std::move(right)}).with_alpha(beta);
  return finish(std::move(out), params_with_inputs("averaging_dialgebra", {{"map", render_matrix(beta)}}, {&alg}, opt),
                "hom-associative-color-dialgebra", identity_binding(kDiSlots), opt);
}

ConstructionResult rb_split(const HomAlgebra& alg, const LinearMap& r, const Rational& weight, SplitMode mode,
                            const ConstructionOptions& opt) {
  require_even_map(alg, r, "Rota-Baxter map");
  const Product& mu = sole_product(alg, "rb_split", opt.input_binding);
  HomAlgebra base = single(alg, mu);
  if (opt.check_preconditions) {
    require_suite(base, "input is Hom-associative", "hom-associative-color", {});
    require_report(base, "R is a Rota-Baxter operator of weight " + to_string(weight),
                   check_operator(base, OperatorKind::rota_baxter(weight), r));
  }
  std::size_t d = alg.dimension();
  bool tri = mode == SplitMode::tridendriform;
  Product left = tabulate("ladj", d, [&](std::size_t i, std::size_t j) {
    Vector v = mu(e(i), r.image(j));
    if (!tri) v.add_scaled(mu.at(i, j), weight);
    return v;
  });
  Product right = tabulate("radj", d, [&](std::size_t i, std::size_t j) {
    return Rational(alg.sign(i, j)) * mu(r.image(i), e(j));
  });
  std::vector<Product> prods{std::move(left), std::move(right)};
  if (tri)
    prods.push_back(tabulate("dot", d, [&](std::size_t i, std::size_t j) {
      return Rational(weight * alg.sign(i, j)) * mu.at(i, j);
    }));
  HomAlgebra out = alg.with_products(std::move(prods));
  json params = {{"map", render_matrix(r)},
                 {"weight", to_string(weight)},
                 {"mode", tri ? "tridendriform" : "dendriform"}};
  return finish(std::move(out), params_with_inputs("rb_split", params, {&alg}, opt),
                tri ? "hom-tridendriform-color" : "hom-dendriform-color",
                identity_binding(tri ? kTriSlots : kDiSlots), opt);
}

ConstructionResult sum_product(const HomAlgebra& tri, const ConstructionOptions& opt) {
  Roles t = roles(tri, kTriSlots, opt.input_binding);
  if (opt.check_preconditions)
    require_suite(tri, "input is Hom-tridendriform", "hom-tridendriform-color", t.binding);
  const Product &l = *t.p[0], &r = *t.p[1], &dot = *t.p[2];
  Product star = tabulate("mu", tri.dimension(), [&](std::size_t i, std::size_t j) {
    return r.at(i, j) + Rational(tri.sign(i, j)) * l.at(i, j) + dot.at(i, j);
  });
  HomAlgebra out = tri.with_products({std::move(star)});
  return finish(std::move(out), params_with_inputs("sum_product", json::object(), {&tri}, opt),
                "hom-associative-color", {{"mu", "mu"}}, opt);
}

ConstructionResult bracket_from(const HomAlgebra& alg, BracketKind kind, const ConstructionOptions& opt) {
  std::size_t d = alg.dimension();
  json params = {{"kind", kind == BracketKind::commutator ? "commutator" : "dialgebra"}};
  if (kind == BracketKind::commutator) {
    const Product& mu = sole_product(alg, "bracket_from", opt.input_binding);
    if (opt.check_preconditions)
      require_suite(single(alg, mu), "input is Hom-associative", "hom-associative-color", {});
    Product br = tabulate("br", d, [&](std::size_t i, std::size_t j) {
      return mu.at(i, j) - Rational(alg.sign(i, j)) * mu.at(j, i);
    });
    HomAlgebra out = alg.with_products({renamed(mu, "mu"), std::move(br)});
    return finish(std::move(out), params_with_inputs("bracket_from", params, {&alg}, opt), "hom-poisson-color",
                  {{"mu", "mu"}, {"br", "br"}}, opt);
  }
  Roles t = roles(alg, kDiSlots, opt.input_binding);
  if (opt.check_preconditions)
    require_suite(alg, "input is a Hom-associative color dialgebra", "hom-associative-color-dialgebra", t.binding);
  const Product &l = *t.p[0], &r = *t.p[1];
  Product br = tabulate("br", d, [&](std::size_t i, std::size_t j) {
    return l.at(i, j) - Rational(alg.sign(i, j)) * r.at(j, i);
  });
  HomAlgebra out = alg.with_products({renamed(l, "ladj"), renamed(r, "radj"), std::move(br)});
  return finish(std::move(out), params_with_inputs("bracket_from", params, {&alg}, opt),
                "hom-poisson-color-dialgebra", {{"ladj", "ladj"}, {"radj", "radj"}, {"br", "br"}}, opt);
}

ConstructionResult tridendriform_to_postlie(const HomAlgebra& tri, const ConstructionOptions& opt) {
  Roles t = roles(tri, kTriSlots, opt.input_binding);
  if (opt.check_preconditions)
    require_suite(tri, "input is Hom-tridendriform", "hom-tridendriform-color", t.binding);
  const Product &l = *t.p[0], &r = *t.p[1], &dot = *t.p[2];
  std::size_t d = tri.dimension();
  Product br = tabulate("br", d, [&](std::size_t i, std::size_t j) {
    return dot.at(i, j) - Rational(tri.sign(i, j)) * dot.at(j, i);
  });
  Product circ = tabulate("dot", d, [&](std::size_t i, std::size_t j) { return r.at(i, j) - l.at(j, i); });
  HomAlgebra out = tri.with_products({std::move(br), std::move(circ)});
  return finish(std::move(out), params_with_inputs("tridendriform_to_postlie", json::object(), {&tri}, opt),
                "hom-post-lie-color", identity_binding(kPostLieSlots), opt);
}

ConstructionResult postlie_star(const HomAlgebra& pl, const ConstructionOptions& opt) {
  Roles t = roles(pl, kPostLieSlots, opt.input_binding);
  if (opt.check_preconditions) require_suite(pl, "input is Hom-post-Lie", "hom-post-lie-color", t.binding);
  const Product &br = *t.p[0], &dot = *t.p[1];
  const Rational half(1, 2);
  Product star = tabulate("mul", pl.dimension(), [&](std::size_t i, std::size_t j) {
    Vector v = dot.at(i, j);
    v.add_scaled(br.at(i, j), half);
    return v;
  });
  HomAlgebra out = pl.with_products({std::move(star)});
  return finish(std::move(out), params_with_inputs("postlie_star", json::object(), {&pl}, opt),
                "hom-lie-admissible-color", {{"mul", "mul"}}, opt);
}

ConstructionResult opposite(const HomAlgebra& tri, const ConstructionOptions& opt) {
  Roles t = roles(tri, kTriSlots, opt.input_binding);
  if (opt.check_preconditions)
    require_suite(tri, "input is Hom-tridendriform", "hom-tridendriform-color", t.binding);
  const Product &l = *t.p[0], &r = *t.p[1], &dot = *t.p[2];
  std::size_t d = tri.dimension();
  Product lo = tabulate("ladj", d, [&](std::size_t i, std::size_t j) { return r.at(j, i); });
  Product ro = tabulate("radj", d, [&](std::size_t i, std::size_t j) { return l.at(j, i); });
  Product dop = tabulate("dot", d, [&](std::size_t i, std::size_t j) { return dot.at(j, i); });
  HomAlgebra out = tri.with_products({std::move(lo), std::move(ro), std::move(dop)});
  return finish(std::move(out), params_with_inputs("opposite", json::object(), {&tri}, opt),
                "hom-tridendriform-color", identity_binding(kTriSlots), opt);
}

ConstructionResult dendriform_from_tri(const HomAlgebra& tri, const ConstructionOptions& opt) {
  Roles t = roles(tri, kTriSlots, opt.input_binding);
  if (opt.check_preconditions)
    require_suite(tri, "input is Hom-tridendriform", "hom-tridendriform-color", t.binding);
  const Product &l = *t.p[0], &r = *t.p[1], &dot = *t.p[2];
  Product rp = tabulate("radj", tri.dimension(), [&](std::size_t i, std::size_t j) { return r.at(i, j) + dot.at(i, j); });
  HomAlgebra out = tri.with_products({renamed(l, "ladj"), std::move(rp)});
  return finish(std::move(out), params_with_inputs("dendriform_from_tri", json::object(), {&tri}, opt),
                "hom-dendriform-color", identity_binding(kDiSlots), opt);
}

namespace {

Binding suite_binding(const HomAlgebra& alg, const std::string& suite, const Binding& given) {
  if (suite.empty()) return {};
  return resolve_binding(alg, SuiteRegistry::builtin().get(suite).slots, given);
}

}  // namespace

ConstructionResult yau_twist(const HomAlgebra& alg, const LinearMap& beta, unsigned n, const std::string& suite,
                             const ConstructionOptions& opt) {
  require_even_map(alg, beta, "twisting map");
  Binding b = suite_binding(alg, suite, opt.input_binding);
  if (opt.check_preconditions) {
    require_report(alg, "beta is an endomorphism", check_morphism(alg, alg, beta));
    if (!suite.empty()) require_suite(alg, "input satisfies " + suite, suite, b);
  }
  LinearMap bn = power(beta, n);
  HomAlgebra out = alg.with_products(compose_products(alg, bn)).with_alpha(compose(bn, alg.alpha()));
  json params = {{"map", render_matrix(beta)}, {"power", n}, {"suite", suite}};
  return finish(std::move(out), params_with_inputs("yau_twist", params, {&alg}, opt), suite, b, opt);
}

ConstructionResult derived_algebra(const HomAlgebra& alg, int dtype, unsigned k, const std::string& suite,
                                   const ConstructionOptions& opt) {
  if (dtype != 1 && dtype != 2) throw StructuralError("derived_algebra: type must be 1 or 2");
  if (dtype == 2 && k >= 32) throw StructuralError("derived_algebra: k too large for type 2");
  Binding b = suite_binding(alg, suite, opt.input_binding);
  if (opt.check_preconditions) {
    require_report(alg, "input is multiplicative", check_multiplicative(alg));
    if (!suite.empty()) require_suite(alg, "input satisfies " + suite, suite, b);
  }
  unsigned prod_power = dtype == 1 ? k : (1u << k) - 1;
  unsigned twist_power = dtype == 1 ? k + 1 : (1u << k);
  HomAlgebra out = alg.with_products(compose_products(alg, power(alg.alpha(), prod_power)))
                       .with_alpha(power(alg.alpha(), twist_power));
  json params = {{"type", dtype}, {"k", k}, {"suite", suite}};
  return finish(std::move(out), params_with_inputs("derived_algebra", params, {&alg}, opt), suite, b, opt);
}

ConstructionResult centroid_twist(const HomAlgebra& alg, const LinearMap& b1, const LinearMap& b2, int variant,
                                  const std::string& suite, const ConstructionOptions& opt) {
  if (variant != 1 && variant != 2) throw StructuralError("centroid_twist: variant must be 1 or 2");
  require_even_map(alg, b1, "beta1");
  require_even_map(alg, b2, "beta2");
  Binding b = suite_binding(alg, suite, opt.input_binding);
  LinearMap b21 = compose(b2, b1);
  if (opt.check_preconditions) {
    require_report(alg, "beta1 is in the centroid", check_operator(alg, OperatorKind::centroid(), b1));
    require_report(alg, "beta2 is in the centroid", check_operator(alg, OperatorKind::centroid(), b2));
    if (!(b21 == compose(b1, b2)))
      throw PreconditionError("beta1 and beta2 commute", json{{"beta2∘beta1", render_matrix(b21)},
                                                              {"beta1∘beta2", render_matrix(compose(b1, b2))}}
                                                             .dump());
    if (auto it = alg.maps().find("R"); it != alg.maps().end()) {
      const LinearMap& r = it->second;
      for (const auto* bi : {&b1, &b2})
        if (!(compose(*bi, r) == compose(r, *bi)))
          throw PreconditionError(std::string(bi == &b1 ? "beta1" : "beta2") + " commutes with R",
                                  json{{"R", render_matrix(r)}, {"beta", render_matrix(*bi)}}.dump());
    }
    if (!suite.empty()) require_suite(alg, "input satisfies " + suite, suite, b);
  }
  std::vector<Product> prods;
  for (const auto& p : alg.products())
    prods.push_back(tabulate(p.name(), alg.dimension(), [&](std::size_t i, std::size_t j) {
      return variant == 1 ? p(b21.image(i), e(j)) : p(b1.image(i), b2.image(j));
    }));
  HomAlgebra out = alg.with_products(std::move(prods)).with_alpha(compose(b21, alg.alpha()));
  json params = {{"map1", render_matrix(b1)}, {"map2", render_matrix(b2)}, {"variant", variant}, {"suite", suite}};
  return finish(std::move(out), params_with_inputs("centroid_twist", params, {&alg}, opt), suite, b, opt);
}

ConstructionResult ideal_dialgebra(const HomAlgebra& s, const std::vector<std::string>& ideal,
                                   const ConstructionOptions& opt) {
  const Product& mu = sole_product(s, "ideal_dialgebra", opt.input_binding);
  HomAlgebra base = single(s, mu);
  const std::size_t n = s.dimension();

  std::set<std::size_t> members;
  for (const auto& name : ideal) members.insert(s.space().index_of(name));
  std::vector<std::size_t> I(members.begin(), members.end());
  const std::size_t k = I.size();
  std::map<std::size_t, std::size_t> pos;
  for (std::size_t t = 0; t < k; ++t) pos[I[t]] = t;

  auto outside = [&](const Vector& v) {
    for (const auto& [idx, c] : v.entries())
      if (!members.count(idx)) return true;
    return false;
  };
  // The ideal conditions are needed to represent the output at all, so they are always checked.
  for (std::size_t i : I) {
    if (outside(s.alpha().image(i)))
      throw PreconditionError("alpha(I) is contained in I",
                              json{{"element", s.space().name(i)},
                                   {"image", render_vector(s.space(), s.alpha().image(i))}}.dump());
    for (std::size_t a = 0; a < n; ++a)
      for (const auto& [l, r] : {std::pair{i, a}, std::pair{a, i}})
        if (outside(mu.at(l, r)))
          throw PreconditionError("I·S + S·I is contained in I",
                                  json{{"left", s.space().name(l)}, {"right", s.space().name(r)},
                                       {"product", render_vector(s.space(), mu.at(l, r))}}.dump());
  }

  if (opt.check_preconditions) {
    require_suite(base, "input is Hom-left-symmetric", "hom-left-symmetric-color", {});
    const LinearMap& al = s.alpha();
    auto m = [&](const Vector& u, const Vector& v) { return mu(u, v); };
    auto assoc_diff = [&](std::size_t x, std::size_t y, std::size_t z) {
      return m(al.image(x), m(e(y), e(z))) - m(m(e(x), e(y)), al.image(z));
    };
    CheckReport h1, h2;
    for (std::size_t i : I)
      for (std::size_t a = 0; a < n && h1.passed; ++a)
        for (std::size_t b = 0; b < n && h1.passed; ++b) {
          ++h1.tuples_checked;
          Vector r = assoc_diff(i, a, b) - Rational(s.sign(i, a)) * assoc_diff(a, i, b);
          if (!r.is_zero()) h1 = {false, Witness{"ideal-hypothesis-1", {i, a, b}, r}, h1.tuples_checked};
        }
    require_report(s, "first ideal hypothesis", h1);
    for (std::size_t j : I)
      for (std::size_t c = 0; c < n && h2.passed; ++c)
        for (std::size_t d = 0; d < n && h2.passed; ++d) {
          ++h2.tuples_checked;
          Vector r = assoc_diff(c, d, j) - Rational(s.sign(c, d)) * assoc_diff(d, c, j);
          if (!r.is_zero()) h2 = {false, Witness{"ideal-hypothesis-2", {c, d, j}, r}, h2.tuples_checked};
        }
    require_report(s, "second ideal hypothesis", h2);
  }

  std::vector<BasisElement> basis;
  for (std::size_t i : I) basis.push_back({"I:" + s.space().name(i), s.degree(i)});
  for (std::size_t a = 0; a < n; ++a) basis.push_back(s.space().basis()[a]);
  GradedSpace space(s.group(), std::move(basis));

  auto to_ideal = [&](const Vector& v) {
    Vector out;
    for (const auto& [idx, c] : v.entries()) out.add(pos.at(idx), c);
    return out;
  };
  auto to_s = [&](const Vector& v) {
    Vector out;
    for (const auto& [idx, c] : v.entries()) out.add(idx + k, c);
    return out;
  };
  // Index p < k is the ideal copy of I[p]; p >= k is basis p - k of S.
  const std::size_t dim = k + n;
  Product left = tabulate("ladj", dim, [&](std::size_t p, std::size_t q) {
    if (q < k) return Vector{};
    std::size_t a2 = q - k;
    return p < k ? to_ideal(mu.at(I[p], a2)) : to_s(mu.at(p - k, a2));
  });
  Product right = tabulate("radj", dim, [&](std::size_t p, std::size_t q) {
    if (p < k) return Vector{};
    std::size_t a1 = p - k;
    return q < k ? to_ideal(mu.at(a1, I[q])) : to_s(mu.at(a1, q - k));
  });
  std::vector<Vector> alpha;
  for (std::size_t i : I) alpha.push_back(to_ideal(s.alpha().image(i)));
  for (std::size_t a = 0; a < n; ++a) alpha.push_back(to_s(s.alpha().image(a)));

  std::vector<std::string> names;
  for (std::size_t i : I) names.push_back(s.space().name(i));
  HomAlgebra out(std::move(space), {std::move(left), std::move(right)}, LinearMap(std::move(alpha), dim), s.eps());
  return finish(std::move(out), params_with_inputs("ideal_dialgebra", {{"ideal", names}}, {&s}, opt),
                "hom-left-symmetric-color-dialgebra", identity_binding(kDiSlots), opt);
}

const std::vector<std::string>& construction_names() {
  static const std::vector<std::string> names{
      "tensor_product", "nijenhuis_deform", "averaging_dialgebra", "rb_split",     "sum_product",
      "bracket_from",   "tridendriform_to_postlie", "postlie_star", "opposite",     "dendriform_from_tri",
      "yau_twist",      "derived_algebra",  "centroid_twist",      "ideal_dialgebra"};
  return names;
}

namespace {

const json& param(const json& p, const char* key, const std::string& op) {
  if (!p.is_object() || !p.contains(key)) throw StructuralError(op + ": missing parameter \"" + key + "\"");
  return p.at(key);
}

std::int64_t int_param(const json& p, const char* key, const std::string& op, std::int64_t fallback) {
  if (!p.is_object() || !p.contains(key)) return fallback;
  const json& v = p.at(key);
  if (v.is_number_integer()) return v.get<std::int64_t>();
  if (v.is_string()) {
    try {
      return std::stoll(v.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  throw StructuralError(op + ": parameter \"" + key + "\" must be an integer");
}

std::string string_param(const json& p, const char* key, std::string fallback) {
  if (p.is_object() && p.contains(key) && p.at(key).is_string()) return p.at(key).get<std::string>();
  return fallback;
}

}  // namespace

ConstructionResult run_construction(const std::string& name, const std::vector<HomAlgebra>& inputs,
                                    const json& parameters, const ConstructionOptions& opt) {
  const json p = parameters.is_null() ? json::object() : parameters;
  std::size_t want = name == "tensor_product" ? 2 : 1;
  if (std::find(construction_names().begin(), construction_names().end(), name) == construction_names().end())
    throw StructuralError("unknown construction '" + name + "'");
  if (inputs.size() != want)
    throw StructuralError(name + " takes " + std::to_string(want) + " input algebra(s), got " +
                          std::to_string(inputs.size()));
  const HomAlgebra& a = inputs.front();
  auto map = [&](const char* key) { return parse_matrix(param(p, key, name), a.dimension(), name + "." + key); };

  if (name == "tensor_product") return tensor_product(inputs[0], inputs[1], opt);
  if (name == "nijenhuis_deform")
    return nijenhuis_deform(a, map("map"), p.value("compose_alpha", false), opt);
  if (name == "averaging_dialgebra") return averaging_dialgebra(a, map("map"), opt);
  if (name == "rb_split") {
    std::string mode = string_param(p, "mode", "tridendriform");
    if (mode != "tridendriform" && mode != "dendriform")
      throw StructuralError("rb_split: mode must be tridendriform or dendriform");
    return rb_split(a, map("map"), parse_rational_json(param(p, "weight", name), "rb_split.weight"),
                    mode == "tridendriform" ? SplitMode::tridendriform : SplitMode::dendriform, opt);
  }
  if (name == "sum_product") return sum_product(a, opt);
  if (name == "bracket_from") {
    std::string kind = string_param(p, "kind", "commutator");
    if (kind != "commutator" && kind != "dialgebra")
      throw StructuralError("bracket_from: kind must be commutator or dialgebra");
    return bracket_from(a, kind == "commutator" ? BracketKind::commutator : BracketKind::dialgebra, opt);
  }
  if (name == "tridendriform_to_postlie") return tridendriform_to_postlie(a, opt);
  if (name == "postlie_star") return postlie_star(a, opt);
  if (name == "opposite") return opposite(a, opt);
  if (name == "dendriform_from_tri") return dendriform_from_tri(a, opt);
  if (name == "yau_twist") {
    std::int64_t n = int_param(p, "power", name, 1);
    if (n < 0) throw StructuralError("yau_twist: power must be nonnegative");
    return yau_twist(a, map("map"), static_cast<unsigned>(n), string_param(p, "suite", ""), opt);
  }
  if (name == "derived_algebra") {
    std::int64_t k = int_param(p, "k", name, 1);
    if (k < 0) throw StructuralError("derived_algebra: k must be nonnegative");
    return derived_algebra(a, static_cast<int>(int_param(p, "type", name, 1)), static_cast<unsigned>(k),
                           string_param(p, "suite", ""), opt);
  }
  if (name == "centroid_twist")
    return centroid_twist(a, map("map1"), map("map2"), static_cast<int>(int_param(p, "variant", name, 1)),
                          string_param(p, "suite", ""), opt);
  // ideal_dialgebra
  std::vector<std::string> ideal;
  if (p.contains("ideal")) {
    if (!p.at("ideal").is_array()) throw StructuralError("ideal_dialgebra: ideal must be a list of basis names");
    for (const auto& s : p.at("ideal")) {
      if (!s.is_string()) throw StructuralError("ideal_dialgebra: ideal must be a list of basis names");
      ideal.push_back(s.get<std::string>());
    }
  }
  return ideal_dialgebra(a, ideal, opt);
}

ConstructionResult replay(const json& provenance, const ConstructionOptions& opt) {
  if (!provenance.is_object()) throw StructuralError("provenance must be an object");
  const json& name = param(provenance, "construction", "provenance");
  if (!name.is_string()) throw StructuralError("provenance.construction must be a string");
  std::vector<HomAlgebra> inputs;
  for (const auto& in : param(provenance, "inputs", "provenance")) inputs.push_back(parse_document(in).algebra);
  ConstructionOptions o = opt;
  if (provenance.contains("input_binding")) o.input_binding = provenance.at("input_binding").get<Binding>();
  return run_construction(name.get<std::string>(), inputs, provenance.value("parameters", json::object()), o);
}

}  // namespace homcolor
