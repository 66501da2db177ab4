#include "cyclefact/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <ostream>
#include <set>

#include "cyclefact/bijection.hpp"
#include "cyclefact/cactus.hpp"
#include "cyclefact/enumeration.hpp"
#include "cyclefact/genfunc.hpp"
#include "cyclefact/io.hpp"

namespace cyclefact {

namespace {

/// Throws std::runtime_error with `what` unless `ok`.
void require(bool ok, const std::string& what) {
  if (!ok)
    throw std::runtime_error(what);
}

std::vector<TypeVector> types_up_to(int max_weight) {
  std::vector<TypeVector> out;
  for (int w = 0; w <= max_weight; ++w) {
    auto level = type_vectors_of_weight(w);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

void check_bijection(int max_weight) {
  for (const auto& alpha : types_up_to(max_weight)) {
    for_each_tree(alpha, [&](const PlaneTree& tree) {
      const Factorization f = tree_to_factorization(tree);
      require(is_minimal_ncycle_factorization(f), "tree reads to a non-factorization: " + f.to_string());
      require(factorization_to_tree(f) == tree, "tree roundtrip failed at " + f.to_string());
      require(tree_permutation(tree) == Permutation::ncycle(tree.n()), "tree walk is not the n-cycle");
    });
  }
}

void check_counts(int max_weight, int oracle_cap) {
  const MultiSeries xi = xi_series(max_weight);
  for (const auto& alpha : types_up_to(max_weight)) {
    const BigInt by_series = coefficient_of(xi, alpha);
    const BigInt by_recursion = count_trees(alpha);
    BigInt by_enumeration = 0;
    for_each_tree(alpha, [&](const PlaneTree&) { by_enumeration += 1; });
    require(by_series == by_recursion && by_recursion == by_enumeration,
            "count mismatch at " + alpha.to_string());
    const int n = alpha.weight() + 1;
    if (n <= oracle_cap) {
      const auto classes = brute_force_classes(alpha, n, {oracle_cap, true});
      require(BigInt(classes.size()) == by_recursion, "oracle mismatch at " + alpha.to_string());
    }
  }
}

void check_catalan(int catalan_max) {
  const MultiSeries xi = xi_series(catalan_max);
  for (int n = 1; n <= catalan_max; ++n) {
    const auto [sum, cn] = catalan_check(xi, n);
    require(sum == cn, "Catalan identity fails at n = " + std::to_string(n));
  }
}

void check_profiles(int max_weight) {
  const GSeriesForms forms = g_series_forms(max_weight);
  require(forms.from_f == forms.from_product, "closed forms of g disagree");
  const MultiSeries g = g_series(max_weight);
  require(g == g.swap_uv(), "g is not symmetric in u and v");
  require(g.at_uv_one() == xi_series(max_weight), "g at u = v = 1 differs from xi");
  require(g.profile_bounded(), "g has a profile exceeding its type");
  for (const auto& alpha : types_up_to(max_weight))
    require(profile_coefficients(g, alpha) == count_by_profile(alpha),
            "profile mismatch at " + alpha.to_string());
}

void check_examples() {
  const Factorization f = parse_factorization("(3 4)(1 2)(2 4)");
  require(evaluate(f) == Permutation::ncycle(4), "(3 4)(1 2)(2 4) is not (1 2 3 4)");
  const auto ht = heads_and_tails(f);
  require(ht.heads.size() == 2 && ht.tails.size() == 1, "(3 4)(1 2)(2 4) should have 2 heads, 1 tail");
  require(evaluate(parse_factorization("(3 4)(1 2 4)")) == Permutation::ncycle(4),
          "(3 4)(1 2 4) is not (1 2 3 4)");
  require(is_arrangeable(parse_multiset("{(1 4 5),(1 3),(2 4)}"), 5).violated() == std::vector<int>{3},
          "first multiset should fail condition 3 only");
  require(is_arrangeable(parse_multiset("{(1 4 5),(1 2 3),(3 4)}"), 5).violated() == std::vector<int>{4},
          "second multiset should fail condition 4 only");
  require(equivalent(arrange(parse_multiset("{(1 4 5),(1 2),(2 3)}"), 5),
                     parse_factorization("(1 4 5)(1 2)(2 3)")),
          "third multiset should arrange to (1 4 5)(1 2)(2 3)");
  require(equivalent(arrange(parse_multiset("{(1 5 6 8),(2 3 5),(4 5),(6 7)}"), 8),
                     parse_factorization("(4 5)(2 3 5)(1 5 6 8)(6 7)")),
          "eight-point cactus should arrange to (4 5)(2 3 5)(1 5 6 8)(6 7)");
}

void check_cacti(int max_weight, int oracle_cap) {
  for (const auto& alpha : types_up_to(max_weight)) {
    for_each_tree(alpha, [&](const PlaneTree& tree) {
      const Cactus cactus = tree_to_cactus(tree);
      require(cactus_to_tree(cactus) == tree, "cactus roundtrip failed");
      const Factorization f = tree_to_factorization(tree);
      std::vector<Cycle> factors(f.factors().begin(), f.factors().end());
      std::sort(factors.begin(), factors.end());
      require(factors == cactus.polygons, "cactus polygons differ from factors");
    });
    const int n = alpha.weight() + 1;
    if (n > oracle_cap)
      continue;
    std::set<std::vector<Cycle>> multisets;
    for (const auto& f : brute_force_classes(alpha, n, {oracle_cap, true})) {
      for (const auto& c : f.factors())
        require(c.is_increasing(), "factor is not increasing");
      std::vector<Cycle> factors(f.factors().begin(), f.factors().end());
      require(equivalent(arrange(factors, n), f), "arrange does not reproduce " + f.to_string());
      std::sort(factors.begin(), factors.end());
      require(std::adjacent_find(factors.begin(), factors.end()) == factors.end(), "repeated factor");
      require(multisets.insert(factors).second, "two classes share a factor multiset");
    }
  }
}

}  // namespace

std::vector<SelfTestCheck> run_selftest(const SelfTestOptions& options, std::ostream& log) {
  const int w = options.max_weight;
  const std::vector<std::pair<std::string, std::function<void()>>> plan = {
      {"bijection roundtrips", [&] { check_bijection(w); }},
      {"series = recursion = enumeration = oracle", [&] { check_counts(w, options.oracle_cap); }},
      {"Catalan identity", [&] { check_catalan(options.catalan_max); }},
      {"head/tail series", [&] { check_profiles(w); }},
      {"worked examples", [&] { check_examples(); }},
      {"cacti, arrange, distinct multisets", [&] { check_cacti(w, options.oracle_cap); }},
  };

  std::vector<SelfTestCheck> results;
  for (const auto& [name, body] : plan) {
    SelfTestCheck check{name, true, "", 0};
    const auto start = std::chrono::steady_clock::now();
    try {
      body();
    } catch (const std::exception& e) {
      check.passed = false;
      check.detail = e.what();
    }
    check.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.3fs", check.seconds);
    log << (check.passed ? "[PASS] " : "[FAIL] ") << name << " (" << timing << ")";
    if (!check.passed)
      log << ": " << check.detail;
    log << '\n';
    results.push_back(std::move(check));
  }
  return results;
}

}  // namespace cyclefact
