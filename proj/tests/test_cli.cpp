#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "homcolor/cli.hpp"
#include "homcolor/constructions.hpp"
#include "support.hpp"

using namespace homcolor;
using testing::fixture;
using testing::fixture_path;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
  json parsed() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "homcolor-cli-test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

std::string write(const std::string& name, const std::string& text) {
  auto p = scratch(name);
  std::ofstream(p) << text;
  return p.string();
}

}  // namespace

TEST_CASE("check exit codes") {
  Run ok = run({"check", fixture_path("tridendriform_a1_b1.json"), "--suite", "hom-tridendriform-color"});
  CHECK(ok.code == 0);
  CHECK(ok.parsed()["passed"] == true);

  Run bad = run({"check", fixture_path("rb_example.json"), "--suite", "hom-lie-color"});
  CHECK(bad.code == 1);
  json w = bad.parsed()["witness"];
  CHECK(w["identity"] == "eps-skew-symmetry");
  CHECK(w["tuple"] == json::array({"e1", "e1"}));
  CHECK(w["residual"] == json{{"e1", "-2"}});

  CHECK(run({"check", fixture_path("rb_example.json"), "--suite", "hom-nothing"}).code == 2);
  CHECK(run({"check", "/nonexistent.json", "--suite", "hom-lie-color"}).code == 2);
  CHECK(run({"check", fixture_path("rb_example.json"), "--suite", "hom-lie-color", "--bind", "br=nu"}).code == 2);
  CHECK(run({"check", fixture_path("rb_example.json"), "--suite", "hom-associative-color", "--bind", "mu=mu"}).code ==
        0);
}

TEST_CASE("check against the expected list") {
  CHECK(run({"check", fixture_path("rb_example.json")}).code == 0);
  CHECK(run({"check", fixture_path("ls_example_a1.json")}).code == 0);
  CHECK(run({"check", fixture_path("postlie_example.json")}).code == 1);
}

TEST_CASE("check operators") {
  CHECK(run({"check", fixture_path("rb_example.json"), "--operator", "rota_baxter", "--weight", "1"}).code == 0);
  CHECK(run({"check", fixture_path("rb_example.json"), "--operator", "rota_baxter", "--weight", "1", "--map", "id"})
            .code == 1);
  CHECK(run({"check", fixture_path("rb_example.json"), "--operator", "centroid", "--map", "-3/2*id"}).code == 0);
  CHECK(run({"check", fixture_path("rb_example.json"), "--operator", "averaging", "--map", "zero"}).code == 0);
  CHECK(run({"check", fixture_path("rb_example.json"), "--operator", "bogus"}).code == 2);
  CHECK(run({"check", fixture_path("rb_example.json"), "--multiplicative"}).code == 0);
}

TEST_CASE("describe and list-suites") {
  Run d = run({"describe", fixture_path("postlie_example.json")});
  CHECK(d.code == 0);
  CHECK(d.parsed()["dimension"] == 3);
  std::string empty = write("empty.json", R"({"group": {"free_rank": 0, "torsion": [2]}, "basis": [], "products": []})");
  Run e = run({"describe", empty});
  CHECK(e.code == 2);
  CHECK(e.err.find("dimension 0") != std::string::npos);

  Run l = run({"list-suites"});
  CHECK(l.code == 0);
  CHECK(l.parsed().size() == 14);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"check"}).code == 2);
  CHECK(run({"construct", fixture_path("rb_example.json")}).code == 2);
}

TEST_CASE("identity") {
  std::string rb = fixture_path("rb_example.json");
  CHECK(run({"identity", rb, "--schema", "mu(mu(x,y),a(z)) - mu(a(x),mu(y,z))"}).code == 0);
  Run f = run({"identity", rb, "--schema", "mu(x,y) + mu(y,x)"});
  CHECK(f.code == 1);
  CHECK(f.parsed()["witness"]["tuple"] == json::array({"e1", "e1"}));
  CHECK(run({"identity", rb, "--schema", "b(x,y)", "--bind", "b=mu"}).code == 1);
  CHECK(run({"identity", rb, "--schema", "mu(x,"}).code == 2);
  CHECK(run({"identity", rb, "--schema", "nu(x,y)"}).code == 2);
}

TEST_CASE("construct") {
  std::string out = scratch("split.json").string();
  Run r = run({"construct", fixture_path("rb_example.json"), "--op", "rb_split", "--map", "R", "--weight", "1", "-o",
               out});
  CHECK(r.code == 0);
  CHECK(r.parsed()["passed"] == true);
  CHECK(r.parsed()["expected_suite"] == "hom-tridendriform-color");
  CHECK(run({"check", out, "--suite", "hom-tridendriform-color"}).code == 0);
  AlgebraDocument doc = load_document_file(out);
  REQUIRE(doc.provenance.is_object());
  CHECK(doc.provenance["construction"] == "rb_split");
  CHECK(replay(doc.provenance).algebra == doc.algebra);

  CHECK(run({"construct", fixture_path("postlie_example.json"), "--op", "postlie_star"}).code == 1);
  Run nv = run({"construct", fixture_path("postlie_example.json"), "--op", "postlie_star", "--no-verify"});
  CHECK(nv.code == 0);
  CHECK(nv.parsed()["algebra"].is_object());

  std::string t = scratch("tensor.json").string();
  CHECK(run({"construct", fixture_path("rb_example.json"), fixture_path("rb_example.json"), "--op", "tensor_product",
             "-o", t})
            .code == 0);
  CHECK(load_document_file(t).algebra.dimension() == 4);
  CHECK(run({"construct", fixture_path("rb_example.json"), "--op", "no_such_op"}).code == 2);
  CHECK(run({"construct", fixture_path("rb_example.json"), "--op", "yau_twist", "--map", "2*id", "--power", "1"})
            .code == 1);
}

TEST_CASE("search") {
  Run s = run({"search", fixture_path("rb_example.json"), "--kind", "rota_baxter", "--weight", "1"});
  CHECK(s.code == 0);
  json j = s.parsed();
  CHECK(j["candidates"] == "9");
  bool has_minus_id = false;
  for (const auto& m : j["maps"]) has_minus_id |= m == json::parse(R"([["-1","0"],["0","-1"]])");
  CHECK(has_minus_id);
  CHECK(run({"search", fixture_path("rb_example.json"), "--kind", "centroid", "--limit", "3"}).code == 2);
  CHECK(run({"search", fixture_path("rb_example.json"), "--kind", "centroid", "--entries", "0,1.5"}).code == 2);
}

TEST_CASE("pretty output") {
  Run p = run({"--pretty", "check", fixture_path("postlie_example.json")});
  CHECK(p.code == 1);
  CHECK(p.out.find("FAIL hom-post-lie-color") != std::string::npos);
  CHECK(p.out.find("at (e1, e1, e2): residual -2*e2") != std::string::npos);
  Run ok = run({"--pretty", "check", fixture_path("rb_example.json")});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("PASS") != std::string::npos);
}

TEST_CASE("map specs and bindings") {
  HomAlgebra rb = fixture("rb_example.json");
  CHECK(resolve_map_spec(rb, "R") == LinearMap::scalar(-1, 2));
  CHECK(resolve_map_spec(rb, "alpha") == rb.alpha());
  CHECK(resolve_map_spec(rb, "id") == LinearMap::identity(2));
  CHECK(resolve_map_spec(rb, "zero") == LinearMap::zero(2, 2));
  CHECK(resolve_map_spec(rb, "-3/2*id") == LinearMap::scalar(Rational(-3, 2), 2));
  CHECK(resolve_map_spec(rb, R"([["1","0"],["0","2"]])") == LinearMap::from_matrix({{1, 0}, {0, 2}}, 2));
  CHECK_THROWS_AS(resolve_map_spec(rb, "Q"), StructuralError);
  CHECK(parse_bindings({"mu=dot", "br=x"}) == Binding{{"mu", "dot"}, {"br", "x"}});
  CHECK_THROWS_AS(parse_bindings({"mu"}), StructuralError);
  CHECK_THROWS_AS(parse_bindings({"mu=a", "mu=b"}), StructuralError);
}
