#include <doctest.h>

#include <random>
#include <sstream>
#include <stdexcept>

#include "cyclefact/io.hpp"
#include "cyclefact/perm_core.hpp"
#include "oracles.hpp"

using namespace cyclefact;

namespace {

Factorization fact(const char* text, int n) { return parse_factorization(text, n); }

TypeVector type(std::initializer_list<std::pair<int, int>> counts) {
  TypeVector a;
  for (auto [j, c] : counts)
    a.add(j, c);
  return a;
}

}  // namespace

TEST_CASE("cycles rotate to their smallest element") {
  CHECK(Cycle({4, 1, 2}).to_string() == "(1 2 4)");
  CHECK(Cycle({1, 5, 6, 8}).to_string() == "(1 5 6 8)");
  CHECK(Cycle({3, 1, 2}).elements()[1] == 2);
  CHECK_FALSE(Cycle({1, 3, 2}).is_increasing());
  CHECK(Cycle({2, 3, 1}).is_increasing());
  CHECK_THROWS_AS(Cycle({2, 2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(Cycle({5}), std::invalid_argument);
  CHECK_THROWS_AS(Cycle({0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Cycle({-1, 2}), std::invalid_argument);
}

TEST_CASE("cycle ordering is by length, then elements") {
  CHECK(Cycle({2, 3}) < Cycle({1, 2, 3}));
  CHECK(Cycle({1, 3}) < Cycle({2, 3}));
  CHECK(Cycle({1, 2}).apply(2) == 1);
  CHECK(Cycle({1, 2}).apply(7) == 7);
}

TEST_CASE("evaluation reads products right to left") {
  CHECK(evaluate(fact("(3 4)(1 2)(2 4)", 4)) == Permutation::ncycle(4));
  CHECK(evaluate(fact("(3 4)(1 2 4)", 4)) == Permutation::ncycle(4));
  CHECK(evaluate(fact("", 3)) == Permutation::identity(3));
  CHECK(evaluate(fact("(1 3)(1 2)", 3)) == Permutation::ncycle(3));
  CHECK(evaluate(fact("(1 2)(1 3)", 3)) != Permutation::ncycle(3));
  CHECK(Permutation::ncycle(4).to_string() == "(1 2 3 4)");
  CHECK(Permutation::identity(3).to_string() == "()");
}

TEST_CASE("evaluation agrees with plain composition") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 6);
    std::vector<Cycle> cycles;
    oracle::Images p = oracle::identity(n);
    const int count = static_cast<int>(rng() % 5);
    for (int k = 0; k < count; ++k) {
      std::vector<int> pts(n);
      std::iota(pts.begin(), pts.end(), 1);
      std::shuffle(pts.begin(), pts.end(), rng);
      pts.resize(2 + rng() % (n - 1));
      cycles.emplace_back(pts);
      std::vector<int> raw(cycles.back().elements().begin(), cycles.back().elements().end());
      p = oracle::after(p, raw);
    }
    CHECK(evaluate(Factorization(n, cycles)) == Permutation(n, p));
  }
}

TEST_CASE("type vectors") {
  CHECK(type_of(fact("(3 4)(1 2)(2 4)", 4)) == type({{2, 3}}));
  CHECK(type_of(fact("(4 5)(2 3 5)(1 5 6 8)(6 7)", 8)) == type({{2, 2}, {3, 1}, {4, 1}}));
  CHECK(type_of(fact("", 3)).is_zero());
  const TypeVector a = type({{2, 3}, {4, 1}});
  CHECK(a.size() == 4);
  CHECK(a.weight() == 6);
  CHECK(a.to_string() == "a2=3,a4=1");
  CHECK(TypeVector().to_string() == "0");
  CHECK((a - type({{4, 1}})) == type({{2, 3}}));
  CHECK(type_vectors_of_weight(3).size() == 3);  // a2=3, a2=1+a3=1, a4=1
  CHECK(type_vectors_of_weight(0) == std::vector<TypeVector>{TypeVector()});
}

TEST_CASE("minimality") {
  CHECK(is_minimal_ncycle_factorization(fact("(3 4)(1 2)(2 4)", 4)));
  CHECK_FALSE(is_minimal_ncycle_factorization(fact("(1 2)(1 2)(1 2)", 2)));
  CHECK(is_minimal_ncycle_factorization(fact("(1 3)(1 2)", 3)));
  CHECK_FALSE(is_minimal_ncycle_factorization(fact("", 3)));
  CHECK(is_minimal_ncycle_factorization(fact("", 1)));
}

TEST_CASE("commute is semantic") {
  CHECK(commute(Cycle({1, 2}), Cycle({3, 4})));
  CHECK_FALSE(commute(Cycle({1, 2}), Cycle({2, 4})));
  CHECK(commute(Cycle({1, 2, 3}), Cycle({1, 2, 3})));
  CHECK(commute(Cycle({1, 2, 3}), Cycle({1, 3, 2})));
  for (const auto& a : oracle::all_cycles(5, 3))
    for (const auto& b : oracle::all_cycles(5, 2))
      CHECK(commute(Cycle(a), Cycle(b)) == oracle::commute(a, b, 5));
}

TEST_CASE("canonical forms and equivalence") {
  CHECK(canonical_form(fact("(3 4)(1 2)(2 4)", 4)) == canonical_form(fact("(1 2)(3 4)(2 4)", 4)));
  CHECK(canonical_form(fact("(1 2)", 2)) == fact("(1 2)", 2));
  CHECK(canonical_form(fact("(1 3)(1 2)", 3)) == fact("(1 3)(1 2)", 3));
  CHECK(equivalent(fact("(3 4)(1 2)(2 4)", 4), fact("(1 2)(3 4)(2 4)", 4)));
  CHECK_FALSE(equivalent(fact("(1 3)(1 2)", 3), fact("(2 3)(1 3)", 3)));
  const auto f = fact("(4 5)(2 3 5)(1 5 6 8)(6 7)", 8);
  CHECK(equivalent(f, f));
}

TEST_CASE("canonical form is constant on swap-closure classes") {
  for (const auto& [counts, n] : std::vector<std::pair<std::map<int, int>, int>>{
           {{{2, 4}}, 5}, {{{2, 2}, {3, 1}}, 5}, {{{3, 2}}, 5}}) {
    std::set<Factorization> seen;
    for (const auto& cls : oracle::classes(counts, n)) {
      const Factorization c = canonical_form(oracle::to_factorization(cls.words.front(), n));
      for (const auto& w : cls.words) {
        const Factorization f = oracle::to_factorization(w, n);
        CHECK(canonical_form(f) == c);
        CHECK(equivalent(f, c));
      }
      CHECK(seen.insert(c).second);
    }
  }
}

TEST_CASE("heads and tails") {
  const auto ht = heads_and_tails(fact("(3 4)(1 2)(2 4)", 4));
  CHECK(ht.heads == std::vector<Cycle>{Cycle({1, 2}), Cycle({3, 4})});
  CHECK(ht.tails == std::vector<Cycle>{Cycle({2, 4})});
  CHECK(ht.profile.heads == type({{2, 2}}));
  CHECK(ht.profile.tails == type({{2, 1}}));

  const auto single = heads_and_tails(fact("(1 3)(1 2)", 3));
  CHECK(single.heads == std::vector<Cycle>{Cycle({1, 3})});
  CHECK(single.tails == std::vector<Cycle>{Cycle({1, 2})});

  const auto one = heads_and_tails(fact("(1 2)", 2));
  CHECK(one.heads == one.tails);
  CHECK(one.heads == std::vector<Cycle>{Cycle({1, 2})});

  CHECK_THROWS_AS(heads_and_tails(fact("(1 2)(1 3)", 3)), std::invalid_argument);
}

TEST_CASE("heads and tails match the swap-closure oracle") {
  for (const auto& cls : oracle::classes({{2, 3}, {3, 1}}, 6)) {
    const auto ht = heads_and_tails(oracle::to_factorization(cls.words.front(), 6));
    CHECK(ht.profile == oracle::profile_of(cls));
    CHECK(ht.heads.size() == cls.heads.size());
  }
}

TEST_CASE("factorizations reject points outside 1..n") {
  CHECK_THROWS_AS(Factorization(3, {Cycle({1, 4})}), std::invalid_argument);
  CHECK_THROWS_AS(Factorization(0, {}), std::invalid_argument);
  std::ostringstream os;
  os << fact("(3 4)(1 2)", 4);
  CHECK(os.str() == "(3 4)(1 2)");
}
