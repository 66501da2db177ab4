#include "cyclefact/enumeration.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <string>

namespace cyclefact {

namespace {

using Continuation = std::function<void()>;

/// Calls `visit` for every beta <= bound componentwise.
void for_each_subvector(const TypeVector& bound, const std::function<void(const TypeVector&)>& visit) {
  const auto dense = bound.dense();
  std::vector<int> current(dense.size(), 0);
  while (true) {
    visit(TypeVector(current));
    std::size_t i = 0;
    while (i < current.size() && current[i] == dense[i]) {
      current[i] = 0;
      ++i;
    }
    if (i == current.size())
      return;
    ++current[i];
  }
}

void subtrees(const TypeVector& alpha, std::vector<int>& code, const Continuation& k);

void forests(const TypeVector& remaining, int parts, std::vector<int>& code, const Continuation& k) {
  if (parts == 1) {
    subtrees(remaining, code, k);
    return;
  }
  for_each_subvector(remaining, [&](const TypeVector& first) {
    subtrees(first, code, [&] { forests(remaining - first, parts - 1, code, k); });
  });
}

void subtrees(const TypeVector& alpha, std::vector<int>& code, const Continuation& k) {
  if (alpha.is_zero()) {
    code.push_back(0);
    k();
    code.pop_back();
    return;
  }
  for (int j = 2; j <= alpha.max_index(); ++j) {
    if (alpha[j] == 0)
      continue;
    code.push_back(2 * j - 1);
    forests(alpha - TypeVector::unit(j), 2 * j - 1, code, k);
    code.pop_back();
  }
}

}  // namespace

void for_each_tree(const TypeVector& alpha, const std::function<void(const PlaneTree&)>& visit) {
  std::vector<int> code;
  subtrees(alpha, code, [&] { visit(PlaneTree(code)); });
}

std::vector<PlaneTree> enumerate_trees(const TypeVector& alpha) {
  std::vector<PlaneTree> out;
  for_each_tree(alpha, [&](const PlaneTree& t) { out.push_back(t); });
  return out;
}

BigInt TreeCounter::count(const TypeVector& alpha) {
  std::lock_guard lock(mutex_);
  return trees(alpha);
}

const BigInt& TreeCounter::trees(const TypeVector& alpha) {
  if (auto it = trees_.find(alpha); it != trees_.end())
    return it->second;
  BigInt total = 0;
  if (alpha.is_zero()) {
    total = 1;
  } else {
    for (int j = 2; j <= alpha.max_index(); ++j) {
      if (alpha[j] > 0)
        total += forests(2 * j - 1, alpha - TypeVector::unit(j));
    }
  }
  return trees_.emplace(alpha, std::move(total)).first->second;
}

const BigInt& TreeCounter::forests(int parts, const TypeVector& alpha) {
  const auto key = std::make_pair(parts, alpha);
  if (auto it = forests_.find(key); it != forests_.end())
    return it->second;
  BigInt total = 0;
  if (parts == 1) {
    total = trees(alpha);
  } else {
    for_each_subvector(alpha, [&](const TypeVector& first) {
      const BigInt& head = trees(first);
      if (head != 0)
        total += head * forests(parts - 1, alpha - first);
    });
  }
  return forests_.emplace(key, std::move(total)).first->second;
}

BigInt count_trees(const TypeVector& alpha) {
  static TreeCounter counter;
  return counter.count(alpha);
}

int oracle_cap_from_env() {
  if (const char* env = std::getenv("CYCLEFACT_ORACLE_CAP")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string("CYCLEFACT_ORACLE_CAP is not an integer: ") + env);
    }
  }
  return BruteForceOptions{}.max_n;
}

namespace {

void collect_cycles(int n, int length, bool increasing_only, std::vector<Cycle>& out) {
  if (length > n)
    return;
  std::vector<bool> pick(static_cast<std::size_t>(n), false);
  std::fill(pick.begin(), pick.begin() + length, true);
  do {
    std::vector<int> subset;
    for (int i = 0; i < n; ++i) {
      if (pick[i])
        subset.push_back(i + 1);
    }
    if (increasing_only) {
      out.emplace_back(subset);
      continue;
    }
    // Fix the minimum first and permute the rest.
    do {
      out.emplace_back(subset);
    } while (std::next_permutation(subset.begin() + 1, subset.end()));
  } while (std::prev_permutation(pick.begin(), pick.end()));
}

struct OracleSearch {
  int n;
  std::vector<std::vector<Cycle>> cycles_by_length;
  std::vector<int> remaining;  // indexed by length
  Permutation target;
  std::vector<Cycle> word;     // rightmost factor first
  std::set<Factorization> classes;

  void run(const Permutation& partial, int left) {
    if (left == 0) {
      if (partial == target) {
        std::vector<Cycle> written(word.rbegin(), word.rend());
        classes.insert(canonical_form(Factorization(n, std::move(written))));
      }
      return;
    }
    for (std::size_t len = 2; len < remaining.size(); ++len) {
      if (remaining[len] == 0)
        continue;
      --remaining[len];
      for (const auto& c : cycles_by_length[len]) {
        Permutation next = partial;
        next.apply_cycle_after(c);
        word.push_back(c);
        run(next, left - 1);
        word.pop_back();
      }
      ++remaining[len];
    }
  }
};

}  // namespace

std::vector<Factorization> brute_force_classes(const TypeVector& alpha, int n,
                                               const BruteForceOptions& options) {
  if (n < 1 || alpha.weight() != n - 1)
    return {};
  if (n > options.max_n)
    throw OracleTooLarge("brute-force oracle refuses n = " + std::to_string(n) + " (cap " +
                         std::to_string(options.max_n) + ")");

  OracleSearch search{n, {}, {}, Permutation::ncycle(n), {}, {}};
  const int top = alpha.max_index();
  search.cycles_by_length.resize(static_cast<std::size_t>(top) + 1);
  search.remaining.assign(static_cast<std::size_t>(top) + 1, 0);
  for (int j = 2; j <= top; ++j) {
    search.remaining[j] = alpha[j];
    if (alpha[j] > 0)
      collect_cycles(n, j, options.increasing_only, search.cycles_by_length[j]);
  }
  search.run(Permutation::identity(n), alpha.size());
  return {search.classes.begin(), search.classes.end()};
}

std::map<HeadTailProfile, BigInt> count_by_profile(const TypeVector& alpha) {
  std::map<HeadTailProfile, BigInt> buckets;
  for_each_tree(alpha, [&](const PlaneTree& t) { buckets[tree_profile(t)] += 1; });
  return buckets;
}

}  // namespace cyclefact
