#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "homcolor/error.hpp"
#include "homcolor/grading.hpp"

using namespace homcolor;

namespace {
Bicharacter sign(std::vector<std::vector<std::int64_t>> m) { return Bicharacter(std::move(m)); }
}  // namespace

TEST_CASE("group construction and degree reduction") {
  GradingGroup g(1, {2, 3});
  CHECK(g.rank() == 3);
  CHECK_FALSE(g.is_finite());
  CHECK(g.degree({-4, 3, -1}).coords == std::vector<std::int64_t>{-4, 1, 2});
  CHECK(g.add(g.degree({1, 1, 2}), g.degree({2, 1, 2})).coords == std::vector<std::int64_t>{3, 0, 1});
  CHECK(g.zero().coords == std::vector<std::int64_t>{0, 0, 0});
  CHECK_THROWS_AS(GradingGroup(0, {1}), StructuralError);
  CHECK_THROWS_AS(GradingGroup(-1, {}), StructuralError);
  CHECK_THROWS_AS(g.degree({1, 0}), StructuralError);
  CHECK(g.contains(Degree{{5, 1, 2}}));
  CHECK_FALSE(g.contains(Degree{{5, 2, 2}}));
}

TEST_CASE("finite groups enumerate their elements in lexicographic order") {
  GradingGroup g(0, {2, 3});
  auto els = g.elements();
  REQUIRE(els.size() == 6);
  CHECK(els.front().coords == std::vector<std::int64_t>{0, 0});
  CHECK(els[1].coords == std::vector<std::int64_t>{0, 1});
  CHECK(els.back().coords == std::vector<std::int64_t>{1, 2});
  CHECK(GradingGroup(0, {}).elements().size() == 1);
  CHECK_THROWS_AS(GradingGroup(1, {}).elements(), StructuralError);
}

TEST_CASE("super sign on Z2") {
  GradingGroup g = GradingGroup::z2();
  Bicharacter eps = sign({{1}});
  CHECK(bicharacter_eval(eps, g.degree({1}), g.degree({1})) == -1);
  CHECK(eps(g.degree({1}), g.degree({0})) == 1);
  CHECK(eps(g.degree({0}), g.degree({0})) == 1);
}

TEST_CASE("Z2xZ2 with the identity exponent matrix") {
  GradingGroup g(0, {2, 2});
  Bicharacter eps = sign({{1, 0}, {0, 1}});
  CHECK(eps(g.degree({1, 0}), g.degree({0, 1})) == 1);
  CHECK(eps(g.degree({1, 0}), g.degree({1, 0})) == -1);
  CHECK(eps(g.degree({1, 1}), g.degree({1, 1})) == 1);
  CHECK(eps(g.degree({1, 1}), g.degree({0, 1})) == -1);
}

TEST_CASE("eps(a, 0) = eps(0, a) = 1 and eps(a, a) is a sign") {
  GradingGroup g(1, {2, 4});
  Bicharacter eps = sign({{1, 1, 0}, {1, 0, 2}, {0, 2, 1}});
  for (std::int64_t a = -3; a <= 3; ++a)
    for (std::int64_t b = 0; b < 2; ++b)
      for (std::int64_t c = 0; c < 4; ++c) {
        Degree d = g.degree({a, b, c});
        CHECK(eps(d, g.zero()) == 1);
        CHECK(eps(g.zero(), d) == 1);
        int s = eps(d, d);
        CHECK((s == 1 || s == -1));
      }
}

TEST_CASE("evaluation rejects mismatched degrees") {
  Bicharacter eps = sign({{1}});
  CHECK_THROWS_AS(eps(Degree{{1, 0}}, Degree{{1}}), StructuralError);
  CHECK_THROWS_AS(sign({{1, 0}, {0}}), StructuralError);
}

TEST_CASE("validation") {
  SUBCASE("super sign passes") {
    auto r = validate_bicharacter(sign({{1}}), GradingGroup::z2());
    CHECK(r.passed);
  }
  SUBCASE("trivial bicharacter passes on any group") {
    CHECK(validate_bicharacter(Bicharacter::trivial(3), GradingGroup(1, {2, 5})).passed);
    CHECK(validate_bicharacter(Bicharacter::trivial(0), GradingGroup(0, {})).passed);
  }
  SUBCASE("non-skew matrix fails with the unit pair") {
    GradingGroup g(0, {2, 2});
    auto r = validate_bicharacter(sign({{0, 1}, {0, 0}}), g);
    CHECK_FALSE(r.passed);
    CHECK(r.axiom == "skew-symmetry");
    REQUIRE(r.witness.size() == 2);
    CHECK(r.witness[0] == g.degree({1, 0}));
    CHECK(r.witness[1] == g.degree({0, 1}));
    Bicharacter eps = sign({{0, 1}, {0, 0}});
    CHECK(eps(r.witness[0], r.witness[1]) * eps(r.witness[1], r.witness[0]) == -1);
  }
  SUBCASE("odd entries on a Z3 coordinate are not well defined") {
    auto r = validate_bicharacter(sign({{1}}), GradingGroup(0, {3}));
    CHECK_FALSE(r.passed);
    CHECK(r.axiom == "well-defined");
  }
  SUBCASE("Z4 coordinates accept any exponent") {
    CHECK(validate_bicharacter(sign({{1}}), GradingGroup(0, {4})).passed);
  }
  SUBCASE("free coordinates with skew parity pass") {
    CHECK(validate_bicharacter(sign({{1, 1}, {3, 0}}), GradingGroup(2, {})).passed);
  }
  SUBCASE("size mismatch is structural") {
    CHECK_THROWS_AS(validate_bicharacter(sign({{1}}), GradingGroup(0, {2, 2})), StructuralError);
  }
}

TEST_CASE("exhaustive axioms for every valid bicharacter on Z2xZ2") {
  GradingGroup g(0, {2, 2});
  int valid = 0;
  for (int mask = 0; mask < 16; ++mask) {
    Bicharacter eps = sign({{mask & 1, (mask >> 1) & 1}, {(mask >> 2) & 1, (mask >> 3) & 1}});
    if (!validate_bicharacter(eps, g).passed) continue;
    ++valid;
    auto els = g.elements();
    for (const auto& a : els)
      for (const auto& b : els) {
        CHECK(eps(a, b) * eps(b, a) == 1);
        for (const auto& c : els) {
          CHECK(eps(a, g.add(b, c)) == eps(a, b) * eps(a, c));
          CHECK(eps(g.add(a, b), c) == eps(a, c) * eps(b, c));
        }
      }
  }
  CHECK(valid == 8);
}
