#pragma once

/**
 * @file perm_core.hpp
 * @brief Cycles, permutations and factorizations of the n-cycle (1 2 ... n).
 *
 * Products are read right to left: in `(3 4)(1 2)(2 4)` the factor `(2 4)`
 * acts first. A factorization stores its factors as written, so
 * `factors().back()` is applied first.
 */

#include <compare>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace cyclefact {

/// A cyclic permutation of at least two distinct positive points, rotated so
/// the smallest point comes first.
class Cycle {
 public:
  explicit Cycle(std::vector<int> elements);

  std::span<const int> elements() const { return elements_; }
  std::size_t length() const { return elements_.size(); }
  int front() const { return elements_.front(); }
  int max_point() const;

  bool contains(int point) const;
  /// Image of `point`; points outside the support are fixed.
  int apply(int point) const;
  bool is_increasing() const;

  bool operator==(const Cycle& other) const = default;
  /// Length first, then lexicographic on the element list.
  std::strong_ordering operator<=>(const Cycle& other) const;

  std::string to_string() const;

 private:
  std::vector<int> elements_;
};

std::ostream& operator<<(std::ostream& os, const Cycle& cycle);

/// A bijection of {1..n}.
class Permutation {
 public:
  static Permutation identity(int n);
  /// The n-cycle (1 2 ... n).
  static Permutation ncycle(int n);

  /// `images[k-1]` is the image of k.
  Permutation(int n, std::vector<int> images);

  int n() const { return static_cast<int>(images_.size()); }
  int operator()(int point) const { return images_[point - 1]; }
  std::span<const int> images() const { return images_; }

  /// Composition `(*this) ∘ rhs`: rhs acts first.
  Permutation then_after(const Permutation& rhs) const;
  /// Left-multiplies by a cycle: the cycle acts after `*this`.
  void apply_cycle_after(const Cycle& cycle);

  bool is_identity() const;
  std::vector<Cycle> disjoint_cycles() const;

  bool operator==(const Permutation& other) const = default;

  /// Disjoint-cycle notation without fixed points; identity prints as "()".
  std::string to_string() const;

 private:
  std::vector<int> images_;
};

std::ostream& operator<<(std::ostream& os, const Permutation& perm);

/// Counts alpha_j of j-cycles, j >= 2. Stored densely from j = 2 with
/// trailing zeros trimmed so that equal vectors compare equal.
class TypeVector {
 public:
  TypeVector() = default;
  /// `counts[0]` is alpha_2, `counts[1]` is alpha_3, ...
  explicit TypeVector(std::vector<int> counts);
  static TypeVector unit(int j);

  int operator[](int j) const;
  void add(int j, int delta = 1);

  /// Largest j with alpha_j > 0, or 1 when the vector is zero.
  int max_index() const { return static_cast<int>(counts_.size()) + 1; }
  bool is_zero() const { return counts_.empty(); }
  /// |alpha| = sum alpha_j.
  int size() const;
  /// <alpha> = sum (j-1) alpha_j.
  int weight() const;

  std::span<const int> dense() const { return counts_; }

  /// Componentwise order test `*this <= other`.
  bool fits_in(const TypeVector& other) const;
  TypeVector operator+(const TypeVector& other) const;
  TypeVector operator-(const TypeVector& other) const;

  bool operator==(const TypeVector& other) const = default;
  auto operator<=>(const TypeVector& other) const = default;

  /// "a2=3,a3=1"; the zero vector prints as "0".
  std::string to_string() const;

 private:
  void trim();
  std::vector<int> counts_;
};

std::ostream& operator<<(std::ostream& os, const TypeVector& alpha);

/// All type vectors of the given weight, in increasing order.
std::vector<TypeVector> type_vectors_of_weight(int weight);

struct HeadTailProfile {
  TypeVector heads;
  TypeVector tails;

  bool operator==(const HeadTailProfile& other) const = default;
  auto operator<=>(const HeadTailProfile& other) const = default;

  std::string to_string() const;
};

/// An ordered product sigma_m ... sigma_1 of cycles on {1..n}.
class Factorization {
 public:
  Factorization(int n, std::vector<Cycle> factors);

  int n() const { return n_; }
  std::span<const Cycle> factors() const { return factors_; }
  std::size_t size() const { return factors_.size(); }
  bool empty() const { return factors_.empty(); }

  bool operator==(const Factorization& other) const = default;
  auto operator<=>(const Factorization& other) const = default;

  /// Concatenated factors, e.g. "(4 5)(2 3 5)"; the empty product is "".
  std::string to_string() const;

 private:
  int n_;
  std::vector<Cycle> factors_;
};

std::ostream& operator<<(std::ostream& os, const Factorization& f);

Permutation evaluate(const Factorization& f);
TypeVector type_of(const Factorization& f);
TypeVector type_of(std::span<const Cycle> cycles);

/// True iff `f` evaluates to (1 2 ... n) with <alpha> = n - 1.
bool is_minimal_ncycle_factorization(const Factorization& f);

/// Semantic commutation: ab = ba as permutations.
bool commute(const Cycle& a, const Cycle& b);

/// Lexicographically least word in the commutation class of `f`, under the
/// cycle order (length, then elements).
Factorization canonical_form(const Factorization& f);
bool equivalent(const Factorization& f1, const Factorization& f2);

struct HeadsAndTails {
  std::vector<Cycle> heads;  // sorted, distinct
  std::vector<Cycle> tails;  // sorted, distinct
  HeadTailProfile profile;
};

/// Factors that can be moved to the leftmost (heads) or rightmost (tails)
/// position. Throws std::invalid_argument unless `f` is a minimal
/// factorization of the n-cycle.
HeadsAndTails heads_and_tails(const Factorization& f);

}  // namespace cyclefact

template <>
struct std::hash<cyclefact::TypeVector> {
  std::size_t operator()(const cyclefact::TypeVector& alpha) const noexcept;
};
