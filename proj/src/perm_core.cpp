#include "cyclefact/perm_core.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace cyclefact {

// ---------------------------------------------------------------- Cycle

Cycle::Cycle(std::vector<int> elements) : elements_(std::move(elements)) {
  if (elements_.size() < 2)
    throw std::invalid_argument("cycle needs at least 2 elements");
  for (int e : elements_) {
    if (e <= 0)
      throw std::invalid_argument("cycle element must be positive: " + std::to_string(e));
  }
  std::vector<int> sorted = elements_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("duplicate element in cycle");

  std::rotate(elements_.begin(), std::min_element(elements_.begin(), elements_.end()),
              elements_.end());
}

int Cycle::max_point() const { return *std::max_element(elements_.begin(), elements_.end()); }

bool Cycle::contains(int point) const {
  return std::find(elements_.begin(), elements_.end(), point) != elements_.end();
}

int Cycle::apply(int point) const {
  auto it = std::find(elements_.begin(), elements_.end(), point);
  if (it == elements_.end())
    return point;
  ++it;
  return it == elements_.end() ? elements_.front() : *it;
}

bool Cycle::is_increasing() const {
  return std::is_sorted(elements_.begin(), elements_.end());
}

std::strong_ordering Cycle::operator<=>(const Cycle& other) const {
  if (auto c = elements_.size() <=> other.elements_.size(); c != 0)
    return c;
  return elements_ <=> other.elements_;
}

std::string Cycle::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (i)
      out += ' ';
    out += std::to_string(elements_[i]);
  }
  out += ')';
  return out;
}

std::ostream& operator<<(std::ostream& os, const Cycle& cycle) { return os << cycle.to_string(); }

// ---------------------------------------------------------------- Permutation

Permutation Permutation::identity(int n) {
  std::vector<int> images(static_cast<std::size_t>(std::max(n, 0)));
  std::iota(images.begin(), images.end(), 1);
  return Permutation(n, std::move(images));
}

Permutation Permutation::ncycle(int n) {
  std::vector<int> images(static_cast<std::size_t>(std::max(n, 0)));
  for (int k = 1; k <= n; ++k)
    images[k - 1] = k == n ? 1 : k + 1;
  return Permutation(n, std::move(images));
}

Permutation::Permutation(int n, std::vector<int> images) : images_(std::move(images)) {
  if (n < 0 || static_cast<int>(images_.size()) != n)
    throw std::invalid_argument("permutation image list has wrong length");
  std::vector<bool> seen(images_.size(), false);
  for (int img : images_) {
    if (img < 1 || img > n || seen[img - 1])
      throw std::invalid_argument("permutation images are not a bijection");
    seen[img - 1] = true;
  }
}

Permutation Permutation::then_after(const Permutation& rhs) const {
  if (rhs.n() != n())
    throw std::invalid_argument("composing permutations of different degree");
  std::vector<int> out(images_.size());
  for (int k = 1; k <= n(); ++k)
    out[k - 1] = (*this)(rhs(k));
  return Permutation(n(), std::move(out));
}

void Permutation::apply_cycle_after(const Cycle& cycle) {
  if (cycle.max_point() > n())
    throw std::invalid_argument("cycle " + cycle.to_string() + " exceeds degree");
  for (int& img : images_)
    img = cycle.apply(img);
}

bool Permutation::is_identity() const {
  for (int k = 1; k <= n(); ++k) {
    if ((*this)(k) != k)
      return false;
  }
  return true;
}

std::vector<Cycle> Permutation::disjoint_cycles() const {
  std::vector<Cycle> out;
  std::vector<bool> seen(images_.size(), false);
  for (int start = 1; start <= n(); ++start) {
    if (seen[start - 1] || (*this)(start) == start)
      continue;
    std::vector<int> orbit;
    for (int k = start; !seen[k - 1]; k = (*this)(k)) {
      seen[k - 1] = true;
      orbit.push_back(k);
    }
    out.emplace_back(std::move(orbit));
  }
  return out;
}

std::string Permutation::to_string() const {
  auto cycles = disjoint_cycles();
  if (cycles.empty())
    return "()";
  std::string out;
  for (const auto& c : cycles)
    out += c.to_string();
  return out;
}

std::ostream& operator<<(std::ostream& os, const Permutation& perm) {
  return os << perm.to_string();
}

// ---------------------------------------------------------------- TypeVector

TypeVector::TypeVector(std::vector<int> counts) : counts_(std::move(counts)) {
  for (int c : counts_) {
    if (c < 0)
      throw std::invalid_argument("type vector entries must be nonnegative");
  }
  trim();
}

TypeVector TypeVector::unit(int j) {
  TypeVector out;
  out.add(j, 1);
  return out;
}

void TypeVector::trim() {
  while (!counts_.empty() && counts_.back() == 0)
    counts_.pop_back();
}

int TypeVector::operator[](int j) const {
  const int idx = j - 2;
  if (idx < 0 || idx >= static_cast<int>(counts_.size()))
    return 0;
  return counts_[idx];
}

void TypeVector::add(int j, int delta) {
  if (j < 2)
    throw std::invalid_argument("type vector index must be >= 2");
  const auto idx = static_cast<std::size_t>(j - 2);
  if (idx >= counts_.size())
    counts_.resize(idx + 1, 0);
  counts_[idx] += delta;
  if (counts_[idx] < 0)
    throw std::invalid_argument("type vector entry would become negative");
  trim();
}

int TypeVector::size() const { return std::accumulate(counts_.begin(), counts_.end(), 0); }

int TypeVector::weight() const {
  int w = 0;
  for (std::size_t i = 0; i < counts_.size(); ++i)
    w += static_cast<int>(i + 1) * counts_[i];
  return w;
}

bool TypeVector::fits_in(const TypeVector& other) const {
  if (counts_.size() > other.counts_.size())
    return false;
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (counts_[i] > other.counts_[i])
      return false;
  }
  return true;
}

TypeVector TypeVector::operator+(const TypeVector& other) const {
  std::vector<int> out(std::max(counts_.size(), other.counts_.size()), 0);
  for (std::size_t i = 0; i < counts_.size(); ++i)
    out[i] += counts_[i];
  for (std::size_t i = 0; i < other.counts_.size(); ++i)
    out[i] += other.counts_[i];
  return TypeVector(std::move(out));
}

TypeVector TypeVector::operator-(const TypeVector& other) const {
  if (!other.fits_in(*this))
    throw std::invalid_argument("type vector subtraction would go negative");
  std::vector<int> out = counts_;
  for (std::size_t i = 0; i < other.counts_.size(); ++i)
    out[i] -= other.counts_[i];
  return TypeVector(std::move(out));
}

std::string TypeVector::to_string() const {
  if (counts_.empty())
    return "0";
  std::string out;
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (counts_[i] == 0)
      continue;
    if (!out.empty())
      out += ',';
    out += 'a' + std::to_string(i + 2) + '=' + std::to_string(counts_[i]);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const TypeVector& alpha) {
  return os << alpha.to_string();
}

namespace {

void weight_partitions(int remaining, int max_j, TypeVector& current, std::vector<TypeVector>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  for (int j = std::min(max_j, remaining + 1); j >= 2; --j) {
    current.add(j, 1);
    weight_partitions(remaining - (j - 1), j, current, out);
    current.add(j, -1);
  }
}

}  // namespace

std::vector<TypeVector> type_vectors_of_weight(int weight) {
  std::vector<TypeVector> out;
  if (weight < 0)
    return out;
  TypeVector current;
  weight_partitions(weight, weight + 1, current, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::string HeadTailProfile::to_string() const {
  return "h=[" + heads.to_string() + "] t=[" + tails.to_string() + "]";
}

// ---------------------------------------------------------------- Factorization

Factorization::Factorization(int n, std::vector<Cycle> factors)
    : n_(n), factors_(std::move(factors)) {
  if (n < 1)
    throw std::invalid_argument("factorization needs n >= 1");
  for (const auto& c : factors_) {
    if (c.max_point() > n)
      throw std::invalid_argument("factor " + c.to_string() + " exceeds n = " + std::to_string(n));
  }
}

std::string Factorization::to_string() const {
  std::string out;
  for (const auto& c : factors_)
    out += c.to_string();
  return out;
}

std::ostream& operator<<(std::ostream& os, const Factorization& f) { return os << f.to_string(); }

Permutation evaluate(const Factorization& f) {
  Permutation p = Permutation::identity(f.n());
  for (auto it = f.factors().rbegin(); it != f.factors().rend(); ++it)
    p.apply_cycle_after(*it);
  return p;
}

TypeVector type_of(std::span<const Cycle> cycles) {
  TypeVector alpha;
  for (const auto& c : cycles)
    alpha.add(static_cast<int>(c.length()));
  return alpha;
}

TypeVector type_of(const Factorization& f) { return type_of(f.factors()); }

bool is_minimal_ncycle_factorization(const Factorization& f) {
  return type_of(f).weight() == f.n() - 1 && evaluate(f) == Permutation::ncycle(f.n());
}

bool commute(const Cycle& a, const Cycle& b) {
  for (int x : a.elements()) {
    if (a.apply(b.apply(x)) != b.apply(a.apply(x)))
      return false;
  }
  for (int x : b.elements()) {
    if (a.apply(b.apply(x)) != b.apply(a.apply(x)))
      return false;
  }
  return true;
}

namespace {

std::vector<std::vector<bool>> commutation_matrix(std::span<const Cycle> factors) {
  const std::size_t m = factors.size();
  std::vector<std::vector<bool>> table(m, std::vector<bool>(m, true));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j)
      table[i][j] = table[j][i] = commute(factors[i], factors[j]);
  }
  return table;
}

}  // namespace

Factorization canonical_form(const Factorization& f) {
  const auto factors = f.factors();
  const auto table = commutation_matrix(factors);
  std::vector<std::size_t> remaining(factors.size());
  std::iota(remaining.begin(), remaining.end(), std::size_t{0});

  std::vector<Cycle> out;
  out.reserve(factors.size());
  while (!remaining.empty()) {
    std::size_t best = remaining.size();
    for (std::size_t r = 0; r < remaining.size(); ++r) {
      const std::size_t i = remaining[r];
      bool movable = true;
      for (std::size_t q = 0; q < r && movable; ++q)
        movable = table[remaining[q]][i];
      if (movable && (best == remaining.size() || factors[i] < factors[remaining[best]]))
        best = r;
    }
    out.push_back(factors[remaining[best]]);
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return Factorization(f.n(), std::move(out));
}

bool equivalent(const Factorization& f1, const Factorization& f2) {
  if (f1.n() != f2.n() || f1.size() != f2.size())
    return false;
  return canonical_form(f1) == canonical_form(f2);
}

HeadsAndTails heads_and_tails(const Factorization& f) {
  if (!is_minimal_ncycle_factorization(f))
    throw std::invalid_argument("not a minimal factorization of the " + std::to_string(f.n()) +
                                "-cycle: " + f.to_string());
  const auto factors = f.factors();
  const auto table = commutation_matrix(factors);
  const std::size_t m = factors.size();

  HeadsAndTails out;
  for (std::size_t i = 0; i < m; ++i) {
    bool head = true;
    for (std::size_t j = 0; j < i && head; ++j)
      head = table[j][i];
    bool tail = true;
    for (std::size_t j = i + 1; j < m && tail; ++j)
      tail = table[i][j];
    if (head)
      out.heads.push_back(factors[i]);
    if (tail)
      out.tails.push_back(factors[i]);
  }
  for (auto* set : {&out.heads, &out.tails}) {
    std::sort(set->begin(), set->end());
    set->erase(std::unique(set->begin(), set->end()), set->end());
  }
  out.profile.heads = type_of(out.heads);
  out.profile.tails = type_of(out.tails);
  return out;
}

}  // namespace cyclefact

std::size_t std::hash<cyclefact::TypeVector>::operator()(
    const cyclefact::TypeVector& alpha) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (int c : alpha.dense())
    h = (h ^ static_cast<std::size_t>(c)) * 0x100000001b3ULL;
  return h;
}
