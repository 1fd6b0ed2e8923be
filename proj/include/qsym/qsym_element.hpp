// Quasisymmetric functions in the monomial basis over an exact scalar ring,
// together with the overlapping-shuffle product, the deconcatenation
// coproduct and realization as polynomials in finitely many variables.
//
// A single canonical internal basis (monomial) means equality of elements is
// equality of sorted term maps.
#pragma once

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qsym/combinatorics.hpp"
#include "qsym/ring.hpp"

namespace qsym {

template <Ring R>
class QSymElement {
 public:
  QSymElement() = default;

  static QSymElement unit() {
    QSymElement e;
    e.terms_.emplace(Composition(), R(1L));
    return e;
  }

  const std::map<Composition, R>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  R coeff(const Composition& alpha) const {
    auto it = terms_.find(alpha);
    return it == terms_.end() ? R(0L) : it->second;
  }

  void add_term(const Composition& alpha, const R& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(alpha);
    if (it == terms_.end()) {
      terms_.emplace(alpha, c);
    } else {
      it->second = it->second + c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  // Largest weight among the terms, 0 for the zero element.
  int degree() const {
    int d = 0;
    for (const auto& [a, c] : terms_) d = std::max(d, a.weight());
    return d;
  }

  bool is_homogeneous(int d) const {
    for (const auto& [a, c] : terms_) {
      if (a.weight() != d) return false;
    }
    return true;
  }

  QSymElement operator-() const {
    QSymElement r;
    for (const auto& [a, c] : terms_) r.terms_.emplace(a, -c);
    return r;
  }
  friend QSymElement operator+(const QSymElement& x, const QSymElement& y) {
    QSymElement r = x;
    for (const auto& [a, c] : y.terms_) r.add_term(a, c);
    return r;
  }
  friend QSymElement operator-(const QSymElement& x, const QSymElement& y) { return x + (-y); }
  friend QSymElement operator*(const R& s, const QSymElement& x) {
    QSymElement r;
    for (const auto& [a, c] : x.terms_) r.add_term(a, s * c);
    return r;
  }
  friend bool operator==(const QSymElement& x, const QSymElement& y) {
    return x.terms_ == y.terms_;
  }
  friend bool operator!=(const QSymElement& x, const QSymElement& y) { return !(x == y); }

 private:
  std::map<Composition, R> terms_;
};

template <Ring R>
QSymElement<R> monomial(const Composition& alpha) {
  QSymElement<R> e;
  e.add_term(alpha, R(1L));
  return e;
}

// Merge parts along the marked positions: bit j-1 of merge_mask glues
// positions j and j+1 into one block, whose parts are summed.
inline Composition collapse(const Composition& alpha, uint32_t merge_mask) {
  std::vector<int> out;
  int acc = 0;
  for (int j = 0; j < alpha.length(); ++j) {
    acc += alpha.parts[static_cast<size_t>(j)];
    bool glued_right = j + 1 < alpha.length() && ((merge_mask >> j) & 1u);
    if (!glued_right) {
      out.push_back(acc);
      acc = 0;
    }
  }
  return Composition(std::move(out));
}

namespace detail {
template <Ring R>
void overlap_shuffles(const std::vector<int>& a, size_t ia, const std::vector<int>& b, size_t ib,
                      std::vector<int>& cur, const R& coeff, QSymElement<R>& out) {
  if (ia == a.size() && ib == b.size()) {
    out.add_term(Composition(std::vector<int>(cur)), coeff);
    return;
  }
  if (ia < a.size()) {
    cur.push_back(a[ia]);
    overlap_shuffles(a, ia + 1, b, ib, cur, coeff, out);
    cur.pop_back();
  }
  if (ib < b.size()) {
    cur.push_back(b[ib]);
    overlap_shuffles(a, ia, b, ib + 1, cur, coeff, out);
    cur.pop_back();
  }
  if (ia < a.size() && ib < b.size()) {
    cur.push_back(a[ia] + b[ib]);
    overlap_shuffles(a, ia + 1, b, ib + 1, cur, coeff, out);
    cur.pop_back();
  }
}
}  // namespace detail

// The product of QSym in the monomial basis: interleave the two part lists,
// optionally adding one part from each side.
template <Ring R>
QSymElement<R> quasi_shuffle_product(const QSymElement<R>& f, const QSymElement<R>& g) {
  QSymElement<R> out;
  std::vector<int> cur;
  for (const auto& [a, ca] : f.terms()) {
    for (const auto& [b, cb] : g.terms()) {
      detail::overlap_shuffles(a.parts, 0, b.parts, 0, cur, ca * cb, out);
    }
  }
  return out;
}

// --- realization -----------------------------------------------------------

// An element of the polynomial ring in x_1..x_k: exponent vectors of fixed
// length k with exact coefficients.
template <Ring R>
class TruncatedPolynomial {
 public:
  explicit TruncatedPolynomial(int vars) : vars_(vars) {
    if (vars < 0) throw std::invalid_argument("TruncatedPolynomial: negative variable count");
  }

  int vars() const { return vars_; }
  const std::map<std::vector<int>, R>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const std::vector<int>& exps, const R& c) {
    if (static_cast<int>(exps.size()) != vars_) {
      throw std::invalid_argument("TruncatedPolynomial: exponent length mismatch");
    }
    if (c.is_zero()) return;
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
      terms_.emplace(exps, c);
    } else {
      it->second = it->second + c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  R coeff(const std::vector<int>& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? R(0L) : it->second;
  }

  friend TruncatedPolynomial operator+(const TruncatedPolynomial& x, const TruncatedPolynomial& y) {
    if (x.vars_ != y.vars_) throw std::invalid_argument("TruncatedPolynomial: variable mismatch");
    TruncatedPolynomial r = x;
    for (const auto& [e, c] : y.terms_) r.add_term(e, c);
    return r;
  }
  friend TruncatedPolynomial operator*(const TruncatedPolynomial& x, const TruncatedPolynomial& y) {
    if (x.vars_ != y.vars_) throw std::invalid_argument("TruncatedPolynomial: variable mismatch");
    TruncatedPolynomial r(x.vars_);
    std::vector<int> e(static_cast<size_t>(x.vars_));
    for (const auto& [ea, ca] : x.terms_) {
      for (const auto& [eb, cb] : y.terms_) {
        for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    }
    return r;
  }
  friend bool operator==(const TruncatedPolynomial& x, const TruncatedPolynomial& y) {
    return x.vars_ == y.vars_ && x.terms_ == y.terms_;
  }
  friend bool operator!=(const TruncatedPolynomial& x, const TruncatedPolynomial& y) {
    return !(x == y);
  }

 private:
  int vars_;
  std::map<std::vector<int>, R> terms_;
};

// Evaluate in the variables x_1..x_k: each monomial term M_alpha becomes the
// sum over strictly increasing index choices i_1 < ... < i_l <= k.
template <Ring R>
TruncatedPolynomial<R> realize(const QSymElement<R>& f, int k) {
  if (k < 1) throw std::invalid_argument("realize: need at least one variable");
  TruncatedPolynomial<R> out(k);
  std::vector<int> idx;
  for (const auto& [alpha, c] : f.terms()) {
    const int l = alpha.length();
    if (l > k) continue;
    // iterate over l-subsets of {1..k} in lexicographic order
    idx.assign(static_cast<size_t>(l), 0);
    for (int i = 0; i < l; ++i) idx[static_cast<size_t>(i)] = i + 1;
    while (true) {
      std::vector<int> exps(static_cast<size_t>(k), 0);
      for (int i = 0; i < l; ++i) exps[static_cast<size_t>(idx[static_cast<size_t>(i)] - 1)] = alpha.parts[static_cast<size_t>(i)];
      out.add_term(exps, c);
      if (l == 0) break;
      int j = l - 1;
      while (j >= 0 && idx[static_cast<size_t>(j)] == k - (l - 1 - j)) --j;
      if (j < 0) break;
      ++idx[static_cast<size_t>(j)];
      for (int t = j + 1; t < l; ++t) idx[static_cast<size_t>(t)] = idx[static_cast<size_t>(t - 1)] + 1;
    }
  }
  return out;
}

// --- coordinates in the enriched q-monomial family --------------------------

// Coefficient vector of a homogeneous degree-n element in the family indexed
// by subsets of [n-1]. The family's transition to the monomial basis is
// triangular with respect to inclusion, so Moebius inversion on the subset
// lattice solves the system directly. Requires q + 1 invertible (or exact
// division by its powers in a polynomial ring).
template <Ring R>
std::map<IndexSet, R> eta_coordinates(const QSymElement<R>& f, int n, const R& q) {
  if (n < 1) throw std::invalid_argument("eta_coordinates: degree must be positive");
  if (!f.is_homogeneous(n) && !f.is_zero()) {
    throw std::invalid_argument("eta_coordinates: element not homogeneous of the given degree");
  }
  const uint32_t full = IndexSet::full_mask(n);
  const R qp1 = q + R(1L);
  // d_S = coeff of M_{comp(S)} divided by (q+1)^{|S|+1}
  std::vector<R> d(static_cast<size_t>(full) + 1, R(0L));
  for (uint32_t s = 0;; ++s) {
    R c = f.coeff(composition_of_subset(n, IndexSet(n, s)));
    if (!c.is_zero()) {
      d[s] = divide_exact(c, ring_pow(qp1, __builtin_popcount(s) + 1));
    }
    if (s == full) break;
  }
  std::map<IndexSet, R> out;
  for (uint32_t j = 0;; ++j) {
    R acc(0L);
    // subsets t of j
    uint32_t t = j;
    while (true) {
      const R& term = d[(~t) & full];
      if (!term.is_zero()) {
        bool odd = (__builtin_popcount(j ^ t) & 1) != 0;
        acc = odd ? acc - term : acc + term;
      }
      if (t == 0) break;
      t = (t - 1) & j;
    }
    if (!acc.is_zero()) out.emplace(IndexSet(n, j), acc);
    if (j == full) break;
  }
  return out;
}

// --- coproduct ---------------------------------------------------------------

// Elements of QSym (x) QSym with exact coefficients.
template <Ring R>
using TensorElement = std::map<std::pair<Composition, Composition>, R>;

template <Ring R>
void tensor_add(TensorElement<R>& t, const Composition& a, const Composition& b, const R& c) {
  if (c.is_zero()) return;
  auto key = std::make_pair(a, b);
  auto it = t.find(key);
  if (it == t.end()) {
    t.emplace(key, c);
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) t.erase(it);
  }
}

// Deconcatenation: M_gamma -> sum of M_prefix (x) M_suffix over all splits.
template <Ring R>
TensorElement<R> deconcatenation_coproduct(const QSymElement<R>& f) {
  TensorElement<R> out;
  for (const auto& [gamma, c] : f.terms()) {
    for (int i = 0; i <= gamma.length(); ++i) {
      Composition pre(std::vector<int>(gamma.parts.begin(), gamma.parts.begin() + i));
      Composition suf(std::vector<int>(gamma.parts.begin() + i, gamma.parts.end()));
      tensor_add(out, pre, suf, c);
    }
  }
  return out;
}

}  // namespace qsym
