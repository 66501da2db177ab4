#include <doctest.h>

#include <json.hpp>

#include "cyclefact/bijection.hpp"
#include "cyclefact/cactus.hpp"
#include "cyclefact/enumeration.hpp"
#include "cyclefact/genfunc.hpp"
#include "cyclefact/io.hpp"

using namespace cyclefact;

TEST_CASE("factorization text roundtrips") {
  for (const char* text : {"(4 5)(2 3 5)(1 5 6 8)(6 7)", "(1 2)", ""}) {
    CHECK(parse_factorization(text).to_string() == text);
  }
  CHECK(parse_factorization(" ( 3 4 ) (1 2)").to_string() == "(3 4)(1 2)");
  CHECK(parse_factorization("(2 1)").to_string() == "(1 2)");
  CHECK(parse_factorization("").n() == 1);
  CHECK(parse_factorization("(1 2)", 4).n() == 4);
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_factorization("(1 2)(3 x)");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 8);
  }
  CHECK_THROWS_AS(parse_factorization("(1 2"), ParseError);
  CHECK_THROWS_AS(parse_factorization("(1 1)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_factorization("(1 5)", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_multiset("(1 2)"), ParseError);
  CHECK_THROWS_AS(parse_type_vector("b2=1"), ParseError);
  CHECK_THROWS_AS(parse_type_vector("a1=1"), ParseError);
}

TEST_CASE("multisets and type vectors") {
  const auto m = parse_multiset("{(1 4 5),(1 3),(2 4)}");
  CHECK(m.size() == 3);
  CHECK(format_multiset(m) == "{(1 4 5),(1 3),(2 4)}");
  CHECK(parse_multiset("{}").empty());
  CHECK(parse_type_vector("a2=3,a3=1").to_string() == "a2=3,a3=1");
  CHECK(parse_type_vector("a3=1,a2=3").to_string() == "a2=3,a3=1");
  CHECK(parse_type_vector("a2=0").is_zero());
  CHECK(parse_type_vector("0").is_zero());
}

TEST_CASE("tree JSON") {
  const PlaneTree t = factorization_to_tree(parse_factorization("(1 2)"));
  const auto j = tree_to_json(t);
  CHECK(j.dump() == R"({"root_child":["leaf","leaf","leaf"]})");
  CHECK(tree_from_json(j) == t);
  for (const auto& alpha : type_vectors_of_weight(4))
    for_each_tree(alpha, [](const PlaneTree& tree) {
      const auto doc = tree_to_json(tree);
      CHECK(tree_from_json(nlohmann::json::parse(doc.dump())) == tree);
    });
  CHECK_THROWS(tree_from_json(nlohmann::json::parse(R"({"root_child":["leaf","leaf"]})")));
  CHECK_THROWS(tree_from_json(nlohmann::json::parse(R"({"other":1})")));
}

TEST_CASE("cactus JSON") {
  const Cactus c = make_cactus(5, parse_multiset("{(1 4 5),(1 2),(2 3)}"));
  const auto j = cactus_to_json(c);
  CHECK(j.dump() == R"({"n":5,"polygons":[[1,2],[2,3],[1,4,5]]})");
  CHECK(cactus_from_json(j) == c);
  CHECK_THROWS_AS(cactus_from_json(nlohmann::json::parse(R"({"n":4,"polygons":[[1,3],[2,4],[1,2]]})")),
                  NotArrangeable);
}

TEST_CASE("DOT output") {
  const PlaneTree t = factorization_to_tree(parse_factorization("(1 2)"));
  const std::string dot = tree_to_dot(t);
  CHECK(dot.rfind("graph", 0) == 0);
  CHECK(dot.find("h1") != std::string::npos);
  CHECK(dot.find("t2") != std::string::npos);
  const std::string cdot = cactus_to_dot(make_cactus(2, {Cycle({1, 2})}));
  CHECK(cdot.find("neato") != std::string::npos);
  CHECK(tree_to_dot(t) == dot);
}

TEST_CASE("series JSON") {
  const auto j = series_to_json(xi_series(2));
  CHECK(j["truncation"] == 2);
  CHECK(j["terms"].size() == 4);  // 1, x2, x3, x2^2
  CHECK(j["terms"][3]["coefficient"] == "3");
}
