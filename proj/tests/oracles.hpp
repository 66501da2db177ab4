#pragma once

// Brute-force reference implementations shared by the test suites. Nothing
// here calls into the library's algorithms: permutations are plain image
// vectors, commutation is checked by composing both ways, and classes are
// the connected components of the adjacent-swap graph on all words.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "cyclefact/perm_core.hpp"

namespace oracle {

using RawCycle = std::vector<int>;  // cyclic order, smallest element first
using Word = std::vector<RawCycle>;
using Images = std::vector<int>;    // images[x-1]

inline int apply(const RawCycle& c, int x) {
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] == x)
      return c[(i + 1) % c.size()];
  return x;
}

/// (p o c)(x) = p(c(x)): c acts first.
inline Images after(const Images& p, const RawCycle& c) {
  Images out(p.size());
  for (std::size_t x = 1; x <= p.size(); ++x)
    out[x - 1] = p[apply(c, static_cast<int>(x)) - 1];
  return out;
}

inline Images identity(int n) {
  Images p(n);
  std::iota(p.begin(), p.end(), 1);
  return p;
}

inline Images ncycle(int n) {
  Images p(n);
  for (int x = 1; x <= n; ++x)
    p[x - 1] = x % n + 1;
  return p;
}

inline bool commute(const RawCycle& a, const RawCycle& b, int n) {
  return after(after(identity(n), a), b) == after(after(identity(n), b), a);
}

/// Every j-cycle on {1..n}, in every cyclic order.
inline std::vector<RawCycle> all_cycles(int n, int j) {
  std::vector<RawCycle> out;
  std::vector<int> pick(j);
  // choose subsets via bitmask, then all orders fixing the minimum first
  for (int mask = 0; mask < (1 << n); ++mask) {
    if (__builtin_popcount(mask) != j)
      continue;
    RawCycle base;
    for (int x = 1; x <= n; ++x)
      if (mask & (1 << (x - 1)))
        base.push_back(x);
    do {
      out.push_back(base);
    } while (std::next_permutation(base.begin() + 1, base.end()));
  }
  return out;
}

/// All words with `counts[j]` j-cycles whose product is (1 2 ... n).
inline std::vector<Word> all_words(const std::map<int, int>& counts, int n) {
  std::map<int, std::vector<RawCycle>> pool;
  for (const auto& [j, c] : counts)
    if (c > 0)
      pool[j] = j <= n ? all_cycles(n, j) : std::vector<RawCycle>{};
  std::map<int, int> left = counts;
  std::vector<Word> out;
  Word word;
  const Images target = ncycle(n);
  auto rec = [&](auto&& self, const Images& prefix) -> void {
    bool done = true;
    for (auto& [j, c] : left) {
      if (c == 0)
        continue;
      done = false;
      --c;
      for (const auto& cyc : pool[j]) {
        word.push_back(cyc);
        self(self, after(prefix, cyc));
        word.pop_back();
      }
      ++c;
    }
    if (done && prefix == target)
      out.push_back(word);
  };
  rec(rec, identity(n));
  return out;
}

struct Class {
  std::vector<Word> words;
  std::set<RawCycle> heads;  // factors appearing first in some word
  std::set<RawCycle> tails;  // factors appearing last in some word
};

/// Connected components of the adjacent-commuting-swap graph on all_words.
inline std::vector<Class> classes(const std::map<int, int>& counts, int n) {
  const auto words = all_words(counts, n);
  std::map<Word, std::size_t> index;
  for (std::size_t i = 0; i < words.size(); ++i)
    index[words[i]] = i;
  std::vector<std::size_t> comp(words.size(), SIZE_MAX);
  std::vector<Class> out;
  for (std::size_t s = 0; s < words.size(); ++s) {
    if (comp[s] != SIZE_MAX)
      continue;
    Class cls;
    std::vector<std::size_t> stack{s};
    comp[s] = out.size();
    while (!stack.empty()) {
      const std::size_t i = stack.back();
      stack.pop_back();
      const Word& w = words[i];
      cls.words.push_back(w);
      if (!w.empty()) {
        cls.heads.insert(w.front());
        cls.tails.insert(w.back());
      }
      for (std::size_t k = 0; k + 1 < w.size(); ++k) {
        if (!commute(w[k], w[k + 1], n))
          continue;
        Word v = w;
        std::swap(v[k], v[k + 1]);
        const std::size_t j = index.at(v);
        if (comp[j] == SIZE_MAX) {
          comp[j] = out.size();
          stack.push_back(j);
        }
      }
    }
    out.push_back(std::move(cls));
  }
  return out;
}

inline std::map<int, int> counts_of(const cyclefact::TypeVector& alpha) {
  std::map<int, int> counts;
  for (int j = 2; j <= alpha.max_index(); ++j)
    if (alpha[j] > 0)
      counts[j] = alpha[j];
  return counts;
}

inline cyclefact::Factorization to_factorization(const Word& w, int n) {
  std::vector<cyclefact::Cycle> cycles;
  for (const auto& c : w)
    cycles.emplace_back(c);
  return cyclefact::Factorization(n, std::move(cycles));
}

/// Head/tail type of a class: counts of distinct head (tail) factors by length.
inline cyclefact::HeadTailProfile profile_of(const Class& cls) {
  cyclefact::HeadTailProfile p;
  for (const auto& c : cls.heads)
    p.heads.add(static_cast<int>(c.size()));
  for (const auto& c : cls.tails)
    p.tails.add(static_cast<int>(c.size()));
  return p;
}

}  // namespace oracle
