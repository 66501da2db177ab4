#pragma once

/**
 * @file enumeration.hpp
 * @brief Tree generation, memoized tree counting and the brute-force
 * factorization oracle.
 */

#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "cyclefact/bigint.hpp"
#include "cyclefact/perm_core.hpp"
#include "cyclefact/plane_tree.hpp"

namespace cyclefact {

/// Calls `visit` once for every plane tree of type `alpha`: top vertex degree
/// ascending, then subtree types in lexicographic composition order. Only the
/// tree under construction is held in memory.
void for_each_tree(const TypeVector& alpha, const std::function<void(const PlaneTree&)>& visit);

std::vector<PlaneTree> enumerate_trees(const TypeVector& alpha);

/// Memoized count of plane trees by splitting at the top vertex. Safe to
/// share between threads.
class TreeCounter {
 public:
  BigInt count(const TypeVector& alpha);

 private:
  const BigInt& trees(const TypeVector& alpha);
  /// Number of ordered `parts`-tuples of trees whose types sum to `alpha`.
  const BigInt& forests(int parts, const TypeVector& alpha);

  std::mutex mutex_;
  std::unordered_map<TypeVector, BigInt> trees_;
  std::map<std::pair<int, TypeVector>, BigInt> forests_;
};

/// count via a process-wide TreeCounter.
BigInt count_trees(const TypeVector& alpha);

class OracleTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct BruteForceOptions {
  /// Refuse inputs with n above this.
  int max_n = 7;
  /// Search only increasing cycles; when false every cyclic order is tried.
  bool increasing_only = true;
};

/// Oracle cap from CYCLEFACT_ORACLE_CAP, else 7.
int oracle_cap_from_env();

/// Exhaustive search over words of cycles of type `alpha` on {1..n}; keeps
/// those evaluating to (1 2 ... n) and returns one canonical representative
/// per commutation class, sorted. Empty unless <alpha> = n - 1.
std::vector<Factorization> brute_force_classes(const TypeVector& alpha, int n,
                                               const BruteForceOptions& options = {});

/// Number of trees of type `alpha` by head/tail profile.
std::map<HeadTailProfile, BigInt> count_by_profile(const TypeVector& alpha);

}  // namespace cyclefact
