#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "cyclefact/cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "cyclefact");
  std::vector<const char*> argv;
  for (const auto& a : args)
    argv.push_back(a.c_str());
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cyclefact::run_cli(static_cast<int>(argv.size()), argv.data(), in, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("count") {
  CHECK(run({"count", "a2=2"}).out == "3\n");
  CHECK(run({"count", "a2=1,a3=1"}).out == "8\n");
  CHECK(run({"count", "a2=0"}).out == "1\n");
  for (const char* method : {"genfunc", "trees", "oracle"})
    CHECK(run({"count", "a2=3", "--method", method}).out == "12\n");
  const Run all = run({"count", "a2=1,a3=1", "--method", "all", "--profiles"});
  CHECK(all.code == 0);
  CHECK(all.out.rfind("8 (genfunc, trees, oracle agree)\n", 0) == 0);
  CHECK(all.out.find("h=[a3=1] t=[a2=1] 4") != std::string::npos);
  const auto doc = nlohmann::json::parse(run({"count", "a2=2", "--json"}).out);
  CHECK(doc["count"] == "3");
}

TEST_CASE("count errors") {
  CHECK(run({"count", "a2=7", "--method", "oracle"}).code == 1);
  CHECK(run({"count", "bogus"}).code == 2);
  CHECK(run({"count"}).code == 2);
  CHECK(run({"count", "a2=1", "--method", "magic"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
  const Run skipped = run({"count", "a2=7", "--method", "all"});
  CHECK(skipped.code == 0);
  CHECK(skipped.out.find("oracle skipped") != std::string::npos);
}

TEST_CASE("check") {
  const Run r = run({"check", "(3 4)(1 2)(2 4)", "--n", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("evaluates to (1 2 3 4); minimal; heads=2 tails=1\n", 0) == 0);
  const Run m = run({"check", "{(1 4 5),(1 3),(2 4)}", "--n", "5"});
  CHECK(m.code == 1);
  CHECK(m.out.rfind("not arrangeable: condition 3", 0) == 0);
  const Run e = run({"check", "", "--n", "3"});
  CHECK(e.code == 1);
  CHECK(e.out == "evaluates to (); not a factorization of (1 2 3)\n");
  const Run bad = run({"check", "(1 2"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("position") != std::string::npos);
  const auto doc = nlohmann::json::parse(run({"check", "(3 4)(1 2)(2 4)", "--json"}).out);
  CHECK(doc["minimal"] == true);
  CHECK(doc["heads"] == "{(1 2),(3 4)}");
}

TEST_CASE("convert") {
  const Run tree = run({"convert", "(1 2)", "--to", "tree"});
  CHECK(tree.code == 0);
  const auto doc = nlohmann::json::parse(tree.out);
  CHECK(doc["root_child"].size() == 3);
  const Run fact = run({"convert", "-", "--from", "cactus", "--to", "fact"},
                       R"({"n":8,"polygons":[[4,5],[6,7],[2,3,5],[1,5,6,8]]})");
  CHECK(fact.code == 0);
  const Run canon = run({"convert", "(4 5)(2 3 5)(1 5 6 8)(6 7)", "--to", "fact"});
  CHECK(fact.out == canon.out);
  CHECK(run({"convert", "(1 2)(1 3)", "--n", "3"}).code == 1);
  CHECK(run({"convert", "{not json", "--from", "tree"}).code == 2);
  CHECK(run({"convert", "(1 2)", "--to", "dot"}).out.rfind("graph", 0) == 0);
}

TEST_CASE("convert chains roundtrip") {
  for (const char* f : {"(1 2)(2 3)", "(3 4)(1 2)(2 4)", "(4 5)(2 3 5)(1 5 6 8)(6 7)", "(1 3)(1 2)"}) {
    const std::string tree = run({"convert", f, "--to", "tree"}).out;
    const std::string cactus = run({"convert", "-", "--from", "tree", "--to", "cactus"}, tree).out;
    const std::string back = run({"convert", "-", "--from", "cactus", "--to", "tree"}, cactus).out;
    CHECK(back == tree);
    const std::string fact = run({"convert", "-", "--from", "tree", "--to", "fact"}, tree).out;
    CHECK(run({"convert", fact, "--to", "tree"}).out == tree);
  }
}

TEST_CASE("output is deterministic") {
  CHECK(run({"count", "a2=2,a3=1", "--method", "all", "--profiles", "--json"}).out ==
        run({"count", "a2=2,a3=1", "--method", "all", "--profiles", "--json"}).out);
  CHECK(run({"series", "g", "--weight", "3"}).out == run({"series", "g", "--weight", "3"}).out);
}

TEST_CASE("selftest") {
  for (const char* w : {"1", "2", "4"}) {
    const Run r = run({"selftest", "--max-weight", w});
    CHECK(r.code == 0);
    CHECK(r.out.find("selftest passed") != std::string::npos);
  }
  CHECK(run({"selftest", "--max-weight", "0"}).code == 2);
}
