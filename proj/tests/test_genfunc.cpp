#include <doctest.h>

#include <map>

#include "cyclefact/enumeration.hpp"
#include "cyclefact/genfunc.hpp"
#include "cyclefact/plane_tree.hpp"

using namespace cyclefact;

namespace {

TypeVector type(std::initializer_list<std::pair<int, int>> counts) {
  TypeVector a;
  for (auto [j, c] : counts)
    a.add(j, c);
  return a;
}

MultiSeries one(int w) { return MultiSeries::constant(w, 1); }

}  // namespace

TEST_CASE("truncated arithmetic") {
  const MultiSeries a = one(1) + MultiSeries::x(1, 2);
  CHECK((a * a).to_string() == "1 + 2*x2");
  const MultiSeries b = one(3) + MultiSeries::x(3, 2);
  CHECK((b * one(3)) == b);
  CHECK(b.pow(3).to_string() == "1 + 3*x2 + 3*x2^2 + x2^3");
  CHECK(b.pow(0) == one(3));
  CHECK((b - b).to_string() == "0");
  CHECK_THROWS_AS(b * a, std::invalid_argument);
  CHECK(MultiSeries::x(2, 3).to_string() == "x3");
  CHECK(MultiSeries::x(2, 4).terms().empty());  // x4 has weight 3
}

TEST_CASE("zero coefficients are not stored") {
  MultiSeries s = MultiSeries::x(3, 2);
  s -= MultiSeries::x(3, 2);
  CHECK(s.terms().empty());
}

TEST_CASE("xi coefficients") {
  const MultiSeries xi = xi_series(4);
  CHECK(coefficient_of(xi, TypeVector()) == 1);
  CHECK(coefficient_of(xi, type({{2, 1}})) == 1);
  CHECK(coefficient_of(xi, type({{2, 2}})) == 3);
  CHECK(coefficient_of(xi, type({{2, 3}})) == 12);
  CHECK(coefficient_of(xi, type({{2, 1}, {3, 1}})) == 8);
  CHECK(coefficient_of(xi, type({{2, 5}})) == 0);  // beyond truncation
  for (int w = 0; w <= 4; ++w)
    for (const auto& alpha : type_vectors_of_weight(w))
      CHECK(coefficient_of(xi, alpha) == count_trees(alpha));
  for (const auto& [m, c] : xi.terms())
    CHECK(m.weight() <= 4);
}

TEST_CASE("Catalan check") {
  CHECK(catalan_check(1) == std::make_pair(BigInt(1), BigInt(1)));
  CHECK(catalan_check(3) == std::make_pair(BigInt(5), BigInt(5)));
  CHECK(catalan_check(5) == std::make_pair(BigInt(42), BigInt(42)));
  CHECK(catalan_number(8) == 1430);
  CHECK_THROWS_AS(catalan_check(xi_series(3), 4), std::invalid_argument);
  CHECK_THROWS_AS(catalan_check(0), std::invalid_argument);
}

TEST_CASE("f marks tails and non-top heads") {
  const FSeries fs = f_series(4);
  CHECK(fs.f_hat == fs.f.swap_uv());
  CHECK(fs.f.coefficient(Monomial(4)) == 1);
  CHECK(fs.f.coefficient(Monomial::of(4, type({{2, 1}}), {}, type({{2, 1}}))) == 1);
  CHECK(fs.f.coefficient(Monomial::of(4, type({{2, 1}}), type({{2, 1}}), type({{2, 1}}))) == 0);
  CHECK(fs.f.profile_bounded());
  // every coefficient equals a count of trees bucketed by the reduced profile
  for (int w = 0; w <= 4; ++w)
    for (const auto& alpha : type_vectors_of_weight(w)) {
      std::map<HeadTailProfile, BigInt> buckets;
      for_each_tree(alpha, [&](const PlaneTree& t) { buckets[reduced_tree_profile(t)] += 1; });
      CHECK(profile_coefficients(fs.f, alpha) == buckets);
    }
}

TEST_CASE("g counts heads and tails") {
  const MultiSeries g = g_series(4);
  CHECK(g.coefficient(Monomial::of(4, type({{2, 1}}), type({{2, 1}}), type({{2, 1}}))) == 1);
  CHECK(g.coefficient(Monomial::of(4, type({{2, 3}}), type({{2, 2}}), type({{2, 1}}))) > 0);
  using P = std::map<HeadTailProfile, BigInt>;
  CHECK(profile_coefficients(g, type({{2, 2}})) == P{{{type({{2, 1}}), type({{2, 1}})}, 3}});
  CHECK(g.profile_bounded());
  CHECK(g == g.swap_uv());
  CHECK(g.at_uv_one() == xi_series(4));
}

TEST_CASE("both closed forms of g miss only the single-vertex trees") {
  const GSeriesForms forms = g_series_forms(4);
  CHECK(forms.from_f == forms.from_product);
  const MultiSeries g = g_series(4);
  const MultiSeries diff = g - forms.from_f;
  for (const auto& [m, c] : diff.terms())
    CHECK(m.x_part().size() == 1);
  // a lone j-cycle is its own head and tail
  for (int j = 2; j <= 5; ++j) {
    const TypeVector a = TypeVector::unit(j);
    CHECK(profile_coefficients(g, a) == std::map<HeadTailProfile, BigInt>{{{a, a}, 1}});
  }
}

TEST_CASE("g agrees with tree profiles at weight 5") {
  const MultiSeries g = g_series(5);
  for (const auto& alpha : type_vectors_of_weight(5))
    CHECK(profile_coefficients(g, alpha) == count_by_profile(alpha));
}
