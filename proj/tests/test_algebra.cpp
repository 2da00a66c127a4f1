#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "homcolor/algebra.hpp"
#include "homcolor/document.hpp"
#include "homcolor/error.hpp"
#include "support.hpp"

using namespace homcolor;
using testing::e;
using testing::fixture;
using testing::q;
using testing::vec;

TEST_CASE("rationals parse exactly") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(to_string(parse_rational("-4/6")) == "-2/3");
  CHECK(parse_rational("+7") == 7);
  CHECK(parse_rational("\xE2\x88\x92" "3/2") == Rational(-3, 2));
  CHECK(to_string(parse_rational("0/5")) == "0");
  for (const char* bad : {"", "1.5", "1e3", "1/0", "/2", "2/", " 1", "--1", "1/-2", "a"})
    CHECK_THROWS_AS(parse_rational(bad), StructuralError);
}

TEST_CASE("vectors store no zeros") {
  Vector v = vec({{0, 1}, {2, q("1/2")}});
  v.add(0, -1);
  CHECK(v.entries().size() == 1);
  CHECK(v.coeff(2) == Rational(1, 2));
  CHECK(v.coeff(7) == 0);
  CHECK((v - v).is_zero());
  CHECK((Rational(0) * v).is_zero());
  CHECK(v.support_bound() == 3);
  CHECK(-(-v) == v);
}

TEST_CASE("graded space validation") {
  GradingGroup g = GradingGroup::z2();
  CHECK_THROWS_AS(GradedSpace(g, {{"a", g.degree({0})}, {"a", g.degree({1})}}), StructuralError);
  CHECK_THROWS_AS(GradedSpace(g, {{"", g.degree({0})}}), StructuralError);
  CHECK_THROWS_AS(GradedSpace(g, {{"a", Degree{{3}}}}), StructuralError);
  GradedSpace s(g, {{"a", g.degree({0})}, {"b", g.degree({1})}, {"c", g.degree({1})}});
  CHECK(s.dimension() == 3);
  CHECK(s.index_of("c") == 2);
  CHECK_THROWS_AS(s.index_of("d"), StructuralError);
  CHECK(s.homogeneous_degree(vec({{1, 1}, {2, 3}})) == g.degree({1}));
  CHECK_FALSE(s.homogeneous_degree(vec({{0, 1}, {2, 3}})).has_value());
  CHECK_FALSE(s.homogeneous_degree(Vector{}).has_value());
}

TEST_CASE("loading the tridendriform fixture") {
  HomAlgebra t = fixture("tridendriform_a1_b1.json");
  CHECK(t.dimension() == 3);
  CHECK(t.products().size() == 3);
  CHECK(map_apply(t.alpha(), e(1)) == vec({{0, 1}, {1, 1}}));
  CHECK(product_eval(t, "ladj", e(1), e(1)) == e(0));
  CHECK(product_eval(t, "radj", e(1), e(1)) == e(0));
}

TEST_CASE("product evaluation on the Rota-Baxter fixture") {
  HomAlgebra rb = fixture("rb_example.json");
  CHECK(product_eval(rb, "mu", e(1), e(1)) == e(0));
  CHECK(product_eval(rb, "mu", e(0), e(0)) == vec({{0, -1}}));
  CHECK(product_eval(rb, "mu", Vector{}, e(1)).is_zero());
  CHECK_THROWS_AS(product_eval(rb, "nope", e(0), e(0)), StructuralError);
  CHECK(map_apply(rb.maps().at("R"), vec({{0, 1}, {1, 1}})) == vec({{0, -1}, {1, -1}}));
  CHECK_THROWS_AS(map_apply(rb.alpha(), e(5)), StructuralError);
}

TEST_CASE("tridendriform fixture at a = 2") {
  HomAlgebra t = fixture("tridendriform_a2_b1.json");
  CHECK(product_eval(t, "dot", e(1), e(1)) == vec({{0, -2}}));
}

TEST_CASE("LS fixture at a = 2 twists e2 by 2") {
  HomAlgebra ls = fixture("ls_example_a2.json");
  CHECK(map_apply(ls.alpha(), e(1)) == vec({{1, 2}}));
  CHECK(map_apply(LinearMap::identity(3), vec({{0, 5}, {2, q("-1/3")}})) == vec({{0, 5}, {2, q("-1/3")}}));
}

TEST_CASE("odd data is rejected") {
  HomAlgebra rb = fixture("rb_example.json");
  SUBCASE("odd product entry") {
    Product p = rb.products().front();
    p.set(1, 1, e(1));
    CHECK_THROWS_AS(rb.with_products({p}), StructuralError);
  }
  SUBCASE("odd alpha") {
    CHECK_THROWS_AS(rb.with_alpha(LinearMap({e(1), e(0)}, 2)), StructuralError);
  }
  SUBCASE("odd auxiliary map") {
    CHECK_THROWS_AS(rb.with_maps({{"R", LinearMap({vec({{0, 1}, {1, 1}}), e(1)}, 2)}}), StructuralError);
  }
  SUBCASE("wrong alpha size") {
    CHECK_THROWS_AS(rb.with_alpha(LinearMap::identity(3)), StructuralError);
  }
  SUBCASE("duplicate product names") {
    CHECK_THROWS_AS(rb.with_products({rb.products()[0], rb.products()[0]}), StructuralError);
  }
}

TEST_CASE("linear map algebra") {
  LinearMap a = LinearMap::from_matrix({{1, 2}, {0, 3}}, 2);
  CHECK(a.image(1) == vec({{0, 2}, {1, 3}}));
  CHECK(a.matrix() == std::vector<std::vector<Rational>>{{1, 2}, {0, 3}});
  LinearMap a2 = compose(a, a);
  CHECK(a2.matrix() == std::vector<std::vector<Rational>>{{1, 8}, {0, 9}});
  CHECK(power(a, 0) == LinearMap::identity(2));
  CHECK(power(a, 2) == a2);
  CHECK((a + Rational(-1) * a) == LinearMap::zero(2, 2));
  CHECK(LinearMap::scalar(3, 2).image(1) == vec({{1, 3}}));
}

TEST_CASE("bilinearity on random rational vectors") {
  HomAlgebra t = fixture("tridendriform_a2_b2.json");
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  auto random_vec = [&] {
    Vector v;
    for (std::size_t i = 0; i < t.dimension(); ++i) v.add(i, Rational(num(rng), den(rng)));
    return v;
  };
  for (int trial = 0; trial < 50; ++trial) {
    Vector u = random_vec(), u2 = random_vec(), w = random_vec();
    Rational c(num(rng), den(rng));
    for (const auto& p : t.products()) {
      CHECK(p(u + u2, w) == p(u, w) + p(u2, w));
      CHECK(p(c * u, w) == c * p(u, w));
      CHECK(p(w, c * u) == c * p(w, u));
    }
  }
}

TEST_CASE("evenness of every fixture") {
  for (const char* f : {"ls_example_a1.json", "tridendriform_a1_b2.json", "rb_example_l3_2.json", "postlie_example.json"}) {
    HomAlgebra a = fixture(f);
    for (const auto& p : a.products())
      for (const auto& [key, v] : p.table()) {
        Degree want = a.group().add(a.degree(key.first), a.degree(key.second));
        for (const auto& [k, c] : v.entries()) CHECK(a.degree(k) == want);
      }
    CHECK(is_even(a.alpha(), a.space(), a.space()));
  }
}
