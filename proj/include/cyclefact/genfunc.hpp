#pragma once

/**
 * @file genfunc.hpp
 * @brief Truncated multivariate power series with exact integer coefficients
 * and the generating functions for H(alpha) and H_{h,t}(alpha).
 *
 * Variables are x_j (a j-cycle factor), u_j (a j-cycle head) and v_j (a
 * j-cycle tail) for j >= 2. The grading gives x_j weight j-1 and u_j, v_j
 * weight 0; a series of truncation W keeps monomials of weight <= W only, so
 * x_j with j > W+1 never appears.
 */

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cyclefact/bigint.hpp"
#include "cyclefact/perm_core.hpp"

namespace cyclefact {

class Monomial {
 public:
  /// The constant monomial 1 for series of truncation `truncation`.
  explicit Monomial(int truncation);
  static Monomial of(int truncation, const TypeVector& x, const TypeVector& u = {},
                     const TypeVector& v = {});

  int truncation() const { return static_cast<int>(exps_.size()) / 3; }
  int x(int j) const { return exps_[slot(j, 0)]; }
  int u(int j) const { return exps_[slot(j, 1)]; }
  int v(int j) const { return exps_[slot(j, 2)]; }
  TypeVector x_part() const { return part(0); }
  TypeVector u_part() const { return part(1); }
  TypeVector v_part() const { return part(2); }

  int weight() const { return weight_; }
  bool is_constant() const;
  /// u_j and v_j exponents never exceed the x_j exponent.
  bool profile_bounded() const;

  /// Product of exponents; the caller checks the weight.
  Monomial operator*(const Monomial& other) const;
  Monomial swapped_uv() const;
  Monomial without_uv() const;

  bool operator==(const Monomial& other) const { return exps_ == other.exps_; }
  /// Weight first, then the exponent vector (x2, u2, v2, x3, u3, v3, ...).
  std::strong_ordering operator<=>(const Monomial& other) const;

  /// "x2^2*u2*v2"; the constant monomial prints as "1".
  std::string to_string() const;

 private:
  std::size_t slot(int j, int kind) const;
  TypeVector part(int kind) const;
  void set(int j, int kind, int exponent);

  std::vector<std::uint8_t> exps_;
  int weight_ = 0;
};

class MultiSeries {
 public:
  /// The zero series.
  explicit MultiSeries(int truncation);
  static MultiSeries constant(int truncation, const BigInt& value);
  static MultiSeries x(int truncation, int j);
  static MultiSeries u(int truncation, int j);
  static MultiSeries v(int truncation, int j);

  int truncation() const { return truncation_; }
  const std::map<Monomial, BigInt>& terms() const { return terms_; }
  BigInt coefficient(const Monomial& m) const;
  /// Adds `c * m`; terms over the truncation weight are dropped.
  void add_term(const Monomial& m, const BigInt& c);

  MultiSeries& operator+=(const MultiSeries& rhs);
  MultiSeries& operator-=(const MultiSeries& rhs);
  MultiSeries operator+(const MultiSeries& rhs) const;
  MultiSeries operator-(const MultiSeries& rhs) const;
  /// Truncated product. Throws std::invalid_argument on mismatched truncation.
  MultiSeries operator*(const MultiSeries& rhs) const;
  MultiSeries pow(int exponent) const;

  /// Exchanges u_j and v_j everywhere.
  MultiSeries swap_uv() const;
  /// Sets every u_j and v_j to 1.
  MultiSeries at_uv_one() const;
  bool profile_bounded() const;

  bool operator==(const MultiSeries& other) const = default;

  /// Terms in (weight, exponent) order, e.g. "1 + x2*u2*v2 + 3*x2^2*u2*v2".
  std::string to_string() const;

 private:
  void check_same(const MultiSeries& rhs) const;

  int truncation_;
  std::map<Monomial, BigInt> terms_;
};

/// Fixed point of xi = 1 + sum_j x_j xi^(2j-1); the coefficient of x^alpha is
/// the number of trees of type alpha.
MultiSeries xi_series(int truncation);

/// Coefficient of x^alpha; zero when <alpha> exceeds the truncation.
BigInt coefficient_of(const MultiSeries& series, const TypeVector& alpha);

/// Coefficients of x^alpha u^h v^t grouped by (h, t).
std::map<HeadTailProfile, BigInt> profile_coefficients(const MultiSeries& series,
                                                       const TypeVector& alpha);

BigInt catalan_number(int n);

/// (sum over <alpha> = n of (-1)^(|alpha|+n) H(alpha), c_n). Throws
/// std::invalid_argument when n < 1 or n exceeds the truncation of `xi`.
std::pair<BigInt, BigInt> catalan_check(const MultiSeries& xi, int n);
std::pair<BigInt, BigInt> catalan_check(int n);

struct FSeries {
  MultiSeries f;      // tails in v, reduced heads (top vertex excluded) in u
  MultiSeries f_hat;  // f with u and v exchanged
};

/// Joint fixed point of f = 1 + sum_n x_n (f^n - 1 + v_n) f_hat^(n-1).
FSeries f_series(int truncation);

struct GSeriesForms {
  /// f - sum_n x_n (1 - u_n) f^n
  MultiSeries from_f;
  /// f f_hat - sum_n x_n (f f_hat)^n
  MultiSeries from_product;
  /// sum_n x_n (1 - u_n)(1 - v_n): the single-vertex trees, whose top vertex
  /// is head and tail at once, which both closed forms above miss.
  MultiSeries single_vertex;
};

GSeriesForms g_series_forms(int truncation);

/// Generating function of H_{h,t}(alpha) with u marking heads and v tails.
/// Throws std::logic_error if the two closed forms disagree.
MultiSeries g_series(int truncation);

}  // namespace cyclefact
