#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include "qrep/quiver.hpp"

using namespace qrep;

namespace {

std::string data_file(const char* name) {
  std::string path = std::string(QREP_DATA_DIR) + "/" + name;
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("two-vertex line algebra") {
  Algebra alg = parse_algebra_text(data_file("a2.json"));
  REQUIRE(alg.n_vertices() == 2);
  REQUIRE(alg.n_arrows() == 1);
  REQUIRE(alg.prime() == 101);
  CHECK(alg.dim() == 3);
  CHECK(alg.residue_paths(0, 0).size() == 1);
  CHECK(alg.residue_paths(0, 1).size() == 1);
  CHECK(alg.residue_paths(1, 0).size() == 0);
  CHECK(alg.residue_paths(1, 1).size() == 1);

  Module s1 = simple_module(alg, 0);
  Module s2 = simple_module(alg, 1);
  Module p1 = projective_module(alg, 0);
  Module p2 = projective_module(alg, 1);
  CHECK(s1.dims == std::vector<u32>{1, 0});
  CHECK(s2.dims == std::vector<u32>{0, 1});
  CHECK(p1.dims == std::vector<u32>{1, 1});
  CHECK(p2.dims == std::vector<u32>{0, 1});
  REQUIRE(p1.mats[0].rows() == 1);
  REQUIRE(p1.mats[0].cols() == 1);
  CHECK(p1.mats[0].at(0, 0) == 1);

  Module reg = regular_module(alg);
  CHECK(reg.dim_total() == alg.dim());
  for (const Module* m : {&s1, &s2, &p1, &p2, &reg}) {
    check_module(alg, *m);
    CHECK(relations_satisfied(alg, *m));
  }
}

TEST_CASE("commutative square algebra") {
  Algebra alg = parse_algebra_text(data_file("square.json"));
  REQUIRE(alg.n_vertices() == 4);
  REQUIRE(alg.n_arrows() == 4);
  CHECK(alg.dim() == 9);

  u32 y1 = *alg.vertex_index("y1");
  u32 y2 = *alg.vertex_index("y2");
  u32 x1 = *alg.vertex_index("x1");
  u32 x2 = *alg.vertex_index("x2");

  CHECK(alg.residue_paths(y1, x2).size() == 1);

  Module py1 = projective_module(alg, y1);
  Module py2 = projective_module(alg, y2);
  Module px1 = projective_module(alg, x1);
  Module px2 = projective_module(alg, x2);

  auto dims_of = [&](const Module& m) {
    return std::vector<u32>{m.dims[y1], m.dims[y2], m.dims[x1], m.dims[x2]};
  };
  CHECK(dims_of(py1) == std::vector<u32>{1, 1, 1, 1});
  CHECK(dims_of(py2) == std::vector<u32>{0, 1, 0, 1});
  CHECK(dims_of(px1) == std::vector<u32>{0, 0, 1, 1});
  CHECK(dims_of(px2) == std::vector<u32>{0, 0, 0, 1});

  Module reg = regular_module(alg);
  CHECK(reg.dim_total() == 9);
  for (const Module* m : {&py1, &py2, &px1, &px2, &reg}) {
    check_module(alg, *m);
    CHECK(relations_satisfied(alg, *m));
  }

  SECTION("relation detects a non-commuting square") {
    Module bad = py1;
    u32 ya = 0;
    bad.mats[ya].at(0, 0) = 2;
    CHECK_FALSE(relations_satisfied(alg, bad));
  }
}

TEST_CASE("content hash distinguishes algebras") {
  Algebra a = parse_algebra_text(data_file("a2.json"));
  Algebra b = parse_algebra_text(data_file("square.json"));
  Algebra a_again = parse_algebra_text(data_file("a2.json"));
  CHECK(a.content_hash() == a_again.content_hash());
  CHECK(a.content_hash() != b.content_hash());
}

TEST_CASE("parse errors") {
  SECTION("invalid json") {
    CHECK_THROWS_AS(parse_algebra_text("{nope"), ParseError);
  }
  SECTION("missing vertices") {
    CHECK_THROWS_AS(parse_algebra_text("{\"arrows\": []}"), ParseError);
  }
  SECTION("duplicate vertex") {
    CHECK_THROWS_AS(parse_algebra_text("{\"vertices\": [\"1\", \"1\"]}"), ParseError);
  }
  SECTION("unknown endpoint") {
    CHECK_THROWS_AS(
        parse_algebra_text(
            "{\"vertices\": [\"1\"], \"arrows\": [{\"name\": \"a\", \"from\": \"1\", \"to\": \"9\"}]}"),
        ParseError);
  }
  SECTION("cyclic quiver") {
    CHECK_THROWS_WITH(
        parse_algebra_text("{\"vertices\": [\"1\", \"2\"], \"arrows\": ["
                           "{\"name\": \"a\", \"from\": \"1\", \"to\": \"2\"},"
                           "{\"name\": \"b\", \"from\": \"2\", \"to\": \"1\"}]}"),
        Catch::Matchers::ContainsSubstring("cyclic"));
  }
  SECTION("non-composable relation path") {
    CHECK_THROWS_WITH(
        parse_algebra_text("{\"vertices\": [\"1\", \"2\", \"3\"], \"arrows\": ["
                           "{\"name\": \"a\", \"from\": \"1\", \"to\": \"2\"},"
                           "{\"name\": \"b\", \"from\": \"1\", \"to\": \"3\"}],"
                           "\"relations\": [[{\"coeff\": 1, \"path\": [\"a\", \"b\"]}]]}"),
        Catch::Matchers::ContainsSubstring("non-composable"));
  }
  SECTION("short relation path") {
    CHECK_THROWS_WITH(
        parse_algebra_text("{\"vertices\": [\"1\", \"2\"], \"arrows\": ["
                           "{\"name\": \"a\", \"from\": \"1\", \"to\": \"2\"}],"
                           "\"relations\": [[{\"coeff\": 1, \"path\": [\"a\"]}]]}"),
        Catch::Matchers::ContainsSubstring("length >= 2"));
  }
  SECTION("prime not exceeding dimension") {
    CHECK_THROWS_WITH(
        parse_algebra_text("{\"vertices\": [\"1\", \"2\"], \"arrows\": ["
                           "{\"name\": \"a\", \"from\": \"1\", \"to\": \"2\"}], \"prime\": 3}"),
        Catch::Matchers::ContainsSubstring("must exceed"));
  }
  SECTION("composite field order") {
    CHECK_THROWS_WITH(
        parse_algebra_text("{\"vertices\": [\"1\"], \"prime\": 10}"),
        Catch::Matchers::ContainsSubstring("prime"));
  }
}
