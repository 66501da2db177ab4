#include "cyclefact/genfunc.hpp"

#include <stdexcept>

namespace cyclefact {

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(int truncation) {
  if (truncation < 0)
    throw std::invalid_argument("truncation weight must be nonnegative");
  exps_.assign(static_cast<std::size_t>(truncation) * 3, 0);
}

std::size_t Monomial::slot(int j, int kind) const {
  const auto idx = static_cast<std::size_t>(j - 2) * 3 + static_cast<std::size_t>(kind);
  if (j < 2 || idx >= exps_.size())
    throw std::out_of_range("variable index " + std::to_string(j) + " outside truncation");
  return idx;
}

void Monomial::set(int j, int kind, int exponent) {
  if (exponent < 0 || exponent > 255)
    throw std::out_of_range("exponent out of range");
  const std::size_t idx = slot(j, kind);
  if (kind == 0)
    weight_ += (j - 1) * (exponent - exps_[idx]);
  exps_[idx] = static_cast<std::uint8_t>(exponent);
}

Monomial Monomial::of(int truncation, const TypeVector& x, const TypeVector& u,
                      const TypeVector& v) {
  Monomial m(truncation);
  const TypeVector* parts[3] = {&x, &u, &v};
  for (int kind = 0; kind < 3; ++kind) {
    const TypeVector& p = *parts[kind];
    for (int j = 2; j <= p.max_index(); ++j) {
      if (p[j] != 0)
        m.set(j, kind, p[j]);
    }
  }
  return m;
}

TypeVector Monomial::part(int kind) const {
  std::vector<int> counts;
  for (std::size_t i = static_cast<std::size_t>(kind); i < exps_.size(); i += 3)
    counts.push_back(exps_[i]);
  return TypeVector(std::move(counts));
}

bool Monomial::is_constant() const {
  for (auto e : exps_) {
    if (e != 0)
      return false;
  }
  return true;
}

bool Monomial::profile_bounded() const {
  for (std::size_t i = 0; i < exps_.size(); i += 3) {
    if (exps_[i + 1] > exps_[i] || exps_[i + 2] > exps_[i])
      return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (exps_.size() != other.exps_.size())
    throw std::invalid_argument("monomials of different truncation");
  Monomial out(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    const int e = exps_[i] + other.exps_[i];
    if (e > 255)
      throw std::overflow_error("monomial exponent overflow");
    out.exps_[i] = static_cast<std::uint8_t>(e);
  }
  out.weight_ = weight_ + other.weight_;
  return out;
}

Monomial Monomial::swapped_uv() const {
  Monomial out(*this);
  for (std::size_t i = 0; i < exps_.size(); i += 3)
    std::swap(out.exps_[i + 1], out.exps_[i + 2]);
  return out;
}

Monomial Monomial::without_uv() const {
  Monomial out(*this);
  for (std::size_t i = 0; i < exps_.size(); i += 3)
    out.exps_[i + 1] = out.exps_[i + 2] = 0;
  return out;
}

std::strong_ordering Monomial::operator<=>(const Monomial& other) const {
  if (auto c = weight_ <=> other.weight_; c != 0)
    return c;
  return exps_ <=> other.exps_;
}

std::string Monomial::to_string() const {
  static constexpr char kNames[3] = {'x', 'u', 'v'};
  std::string out;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0)
      continue;
    if (!out.empty())
      out += '*';
    out += kNames[i % 3];
    out += std::to_string(i / 3 + 2);
    if (exps_[i] > 1)
      out += '^' + std::to_string(exps_[i]);
  }
  return out.empty() ? "1" : out;
}

// ---------------------------------------------------------------- MultiSeries

MultiSeries::MultiSeries(int truncation) : truncation_(truncation) {
  if (truncation < 0)
    throw std::invalid_argument("truncation weight must be nonnegative");
}

MultiSeries MultiSeries::constant(int truncation, const BigInt& value) {
  MultiSeries s(truncation);
  s.add_term(Monomial(truncation), value);
  return s;
}

MultiSeries MultiSeries::x(int truncation, int j) {
  MultiSeries s(truncation);
  if (j - 1 <= truncation)
    s.add_term(Monomial::of(truncation, TypeVector::unit(j)), 1);
  return s;
}

MultiSeries MultiSeries::u(int truncation, int j) {
  MultiSeries s(truncation);
  s.add_term(Monomial::of(truncation, {}, TypeVector::unit(j)), 1);
  return s;
}

MultiSeries MultiSeries::v(int truncation, int j) {
  MultiSeries s(truncation);
  s.add_term(Monomial::of(truncation, {}, {}, TypeVector::unit(j)), 1);
  return s;
}

BigInt MultiSeries::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void MultiSeries::add_term(const Monomial& m, const BigInt& c) {
  if (m.truncation() != truncation_)
    throw std::invalid_argument("monomial truncation does not match series");
  if (c == 0 || m.weight() > truncation_)
    return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0)
      terms_.erase(it);
  }
}

void MultiSeries::check_same(const MultiSeries& rhs) const {
  if (rhs.truncation_ != truncation_)
    throw std::invalid_argument("series truncations differ: " + std::to_string(truncation_) +
                                " vs " + std::to_string(rhs.truncation_));
}

MultiSeries& MultiSeries::operator+=(const MultiSeries& rhs) {
  check_same(rhs);
  for (const auto& [m, c] : rhs.terms_)
    add_term(m, c);
  return *this;
}

MultiSeries& MultiSeries::operator-=(const MultiSeries& rhs) {
  check_same(rhs);
  for (const auto& [m, c] : rhs.terms_)
    add_term(m, -c);
  return *this;
}

MultiSeries MultiSeries::operator+(const MultiSeries& rhs) const {
  MultiSeries out(*this);
  out += rhs;
  return out;
}

MultiSeries MultiSeries::operator-(const MultiSeries& rhs) const {
  MultiSeries out(*this);
  out -= rhs;
  return out;
}

MultiSeries MultiSeries::operator*(const MultiSeries& rhs) const {
  check_same(rhs);
  MultiSeries out(truncation_);
  for (const auto& [ma, ca] : terms_) {
    const int budget = truncation_ - ma.weight();
    // Terms are ordered by weight, so the inner loop can stop early.
    for (const auto& [mb, cb] : rhs.terms_) {
      if (mb.weight() > budget)
        break;
      out.add_term(ma * mb, ca * cb);
    }
  }
  return out;
}

MultiSeries MultiSeries::pow(int exponent) const {
  if (exponent < 0)
    throw std::invalid_argument("negative power of a series");
  MultiSeries result = constant(truncation_, 1);
  MultiSeries base = *this;
  while (exponent > 0) {
    if (exponent & 1)
      result = result * base;
    exponent >>= 1;
    if (exponent > 0)
      base = base * base;
  }
  return result;
}

MultiSeries MultiSeries::swap_uv() const {
  MultiSeries out(truncation_);
  for (const auto& [m, c] : terms_)
    out.add_term(m.swapped_uv(), c);
  return out;
}

MultiSeries MultiSeries::at_uv_one() const {
  MultiSeries out(truncation_);
  for (const auto& [m, c] : terms_)
    out.add_term(m.without_uv(), c);
  return out;
}

bool MultiSeries::profile_bounded() const {
  for (const auto& [m, c] : terms_) {
    if (!m.profile_bounded())
      return false;
  }
  return true;
}

std::string MultiSeries::to_string() const {
  if (terms_.empty())
    return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    const bool negative = c < 0;
    const BigInt magnitude = negative ? BigInt(-c) : c;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (m.is_constant()) {
      out += magnitude.str();
    } else {
      if (magnitude != 1)
        out += magnitude.str() + '*';
      out += m.to_string();
    }
  }
  return out;
}

// ---------------------------------------------------------------- generating functions

MultiSeries xi_series(int truncation) {
  const MultiSeries one = MultiSeries::constant(truncation, 1);
  MultiSeries xi = one;
  // Each pass fixes one more weight level.
  for (int pass = 0; pass <= truncation; ++pass) {
    MultiSeries next = one;
    for (int j = 2; j - 1 <= truncation; ++j)
      next += MultiSeries::x(truncation, j) * xi.pow(2 * j - 1);
    xi = std::move(next);
  }
  return xi;
}

BigInt coefficient_of(const MultiSeries& series, const TypeVector& alpha) {
  if (alpha.weight() > series.truncation())
    return 0;
  return series.coefficient(Monomial::of(series.truncation(), alpha));
}

std::map<HeadTailProfile, BigInt> profile_coefficients(const MultiSeries& series,
                                                       const TypeVector& alpha) {
  std::map<HeadTailProfile, BigInt> out;
  for (const auto& [m, c] : series.terms()) {
    if (m.weight() == alpha.weight() && m.x_part() == alpha)
      out[HeadTailProfile{m.u_part(), m.v_part()}] += c;
  }
  return out;
}

BigInt catalan_number(int n) {
  if (n < 0)
    throw std::invalid_argument("Catalan index must be nonnegative");
  // binomial(2n, n) / (n + 1), built as a running product of exact quotients.
  BigInt binom = 1;
  for (int k = 1; k <= n; ++k)
    binom = binom * (n + k) / k;
  return binom / (n + 1);
}

std::pair<BigInt, BigInt> catalan_check(const MultiSeries& xi, int n) {
  if (n < 1)
    throw std::invalid_argument("Catalan check needs n >= 1");
  if (n > xi.truncation())
    throw std::invalid_argument("n = " + std::to_string(n) + " exceeds truncation " +
                                std::to_string(xi.truncation()));
  BigInt sum = 0;
  for (const auto& alpha : type_vectors_of_weight(n)) {
    const BigInt h = coefficient_of(xi, alpha);
    if ((alpha.size() + n) % 2 == 0)
      sum += h;
    else
      sum -= h;
  }
  return {sum, catalan_number(n)};
}

std::pair<BigInt, BigInt> catalan_check(int n) {
  if (n < 1)
    throw std::invalid_argument("Catalan check needs n >= 1");
  return catalan_check(xi_series(n), n);
}

FSeries f_series(int truncation) {
  const MultiSeries one = MultiSeries::constant(truncation, 1);
  MultiSeries f = one;
  for (int pass = 0; pass <= truncation; ++pass) {
    const MultiSeries f_hat = f.swap_uv();
    MultiSeries next = one;
    for (int n = 2; n - 1 <= truncation; ++n) {
      const MultiSeries bracket = f.pow(n) - one + MultiSeries::v(truncation, n);
      next += MultiSeries::x(truncation, n) * bracket * f_hat.pow(n - 1);
    }
    f = std::move(next);
  }
  MultiSeries f_hat = f.swap_uv();
  return {std::move(f), std::move(f_hat)};
}

GSeriesForms g_series_forms(int truncation) {
  const MultiSeries one = MultiSeries::constant(truncation, 1);
  const FSeries fs = f_series(truncation);
  const MultiSeries product = fs.f * fs.f_hat;

  GSeriesForms forms{fs.f, product, MultiSeries(truncation)};
  for (int n = 2; n - 1 <= truncation; ++n) {
    const MultiSeries xn = MultiSeries::x(truncation, n);
    const MultiSeries not_head = one - MultiSeries::u(truncation, n);
    const MultiSeries not_tail = one - MultiSeries::v(truncation, n);
    forms.from_f -= xn * not_head * fs.f.pow(n);
    forms.from_product -= xn * product.pow(n);
    forms.single_vertex += xn * not_head * not_tail;
  }
  return forms;
}

MultiSeries g_series(int truncation) {
  GSeriesForms forms = g_series_forms(truncation);
  if (!(forms.from_f == forms.from_product))
    throw std::logic_error("closed forms of the head/tail series disagree");
  return forms.from_f + forms.single_vertex;
}

}  // namespace cyclefact
