// The universal, enriched q-monomial and q-fundamental families expanded in
// the monomial basis, plus executable forms of their product and coproduct
// rules.
//
// Everything is parametrised by the coefficient ring carrying the value of
// q: a rational, a root of unity, or the polynomial ring for symbolic work.
#pragma once

#include <map>

#include "qsym/combinatorics.hpp"
#include "qsym/qsym_element.hpp"
#include "qsym/ring.hpp"

namespace qsym {

// Generating function of the weighted chain with the given descent set,
// grouped by which consecutive positions share a variable. A pattern
// E of coincidences contributes q^{|E cap des|} (q+1)^{n-|E|} M_{collapse},
// and is admissible unless some peak j of des has both j-1 and j in E
// (three equal consecutive variables across a peak are forbidden).
template <Ring R>
QSymElement<R> universal(const IndexSet& des, const Composition& alpha, const R& q) {
  const int n = alpha.length();
  if (n == 0) return QSymElement<R>::unit();
  if (des.ambient != n) throw std::invalid_argument("universal: descent set ambient mismatch");
  const uint32_t full = IndexSet::full_mask(n);
  const IndexSet peaks = peak_set_of_subset(des);
  const R qp1 = q + R(1L);

  // Powers of q and q+1 are reused across the 2^{n-1} patterns.
  std::vector<R> q_pow(static_cast<size_t>(n) + 1, R(1L));
  std::vector<R> qp1_pow(static_cast<size_t>(n) + 1, R(1L));
  for (int i = 1; i <= n; ++i) {
    q_pow[static_cast<size_t>(i)] = q_pow[static_cast<size_t>(i - 1)] * q;
    qp1_pow[static_cast<size_t>(i)] = qp1_pow[static_cast<size_t>(i - 1)] * qp1;
  }

  // Patterns E with j-1, j both marked for a peak j correspond to mask bits
  // j-2 and j-1 set simultaneously.
  uint32_t peak_pair_masks[32];
  int n_peaks = 0;
  for (int j : peaks.members()) peak_pair_masks[n_peaks++] = 3u << (j - 2);

  QSymElement<R> out;
  for (uint32_t e = 0;; ++e) {
    bool ok = true;
    for (int t = 0; t < n_peaks && ok; ++t) {
      if ((e & peak_pair_masks[t]) == peak_pair_masks[t]) ok = false;
    }
    if (ok) {
      const int merged = __builtin_popcount(e);
      const int q_exp = __builtin_popcount(e & des.mask);
      out.add_term(collapse(alpha, e),
                   q_pow[static_cast<size_t>(q_exp)] * qp1_pow[static_cast<size_t>(n - merged)]);
    }
    if (e == full) break;
  }
  return out;
}

template <Ring R>
QSymElement<R> universal(const Permutation& pi, const Composition& alpha, const R& q) {
  if (pi.size() != alpha.length()) throw std::invalid_argument("universal: length mismatch");
  return universal(descent_set(pi), alpha, q);
}

// Enriched q-monomial indexed by a subset of [s-1]: coincidence patterns
// must contain I, each contributing (q+1)^{s-|E|} M_{collapse(1^s, E)}.
template <Ring R>
QSymElement<R> eta(int s, const IndexSet& I, const R& q) {
  if (s < 1) throw std::invalid_argument("eta: weight must be positive");
  if (I.ambient != s) throw std::invalid_argument("eta: set not inside [s-1]");
  const uint32_t full = IndexSet::full_mask(s);
  const R qp1 = q + R(1L);
  const Composition ones(std::vector<int>(static_cast<size_t>(s), 1));
  QSymElement<R> out;
  // Enumerate supersets of I.mask inside full.
  const uint32_t free_bits = full & ~I.mask;
  uint32_t extra = 0;
  while (true) {
    const uint32_t e = I.mask | extra;
    out.add_term(collapse(ones, e), ring_pow(qp1, s - __builtin_popcount(e)));
    if (extra == free_bits) break;
    extra = (extra - free_bits) & free_bits;  // next subset of free_bits
  }
  return out;
}

// q-fundamental: the universal function with unit weights; depends only on
// the descent set.
template <Ring R>
QSymElement<R> fundamental(int n, const IndexSet& I, const R& q) {
  if (n < 1) throw std::invalid_argument("fundamental: degree must be positive");
  return universal(I, Composition(std::vector<int>(static_cast<size_t>(n), 1)), q);
}

// Expansion of the q-fundamental over the enriched q-monomial family:
// the subset J u (K-1) u K receives (-q)^{|K|} (q-1)^{|J|}, summed over
// J inside I and K inside the run starts of I with J, K disjoint.
template <Ring R>
std::map<IndexSet, R> fundamental_in_eta_basis(int n, const IndexSet& I, const R& q) {
  if (n < 1) throw std::invalid_argument("fundamental_in_eta_basis: degree must be positive");
  if (I.ambient != n) throw std::invalid_argument("fundamental_in_eta_basis: set not inside [n-1]");
  const R qm1 = q - R(1L);
  const R mq = -q;
  std::map<IndexSet, R> out;
  const uint32_t imask = I.mask;
  const uint32_t pmask = peak_set_of_subset(I).mask;
  uint32_t j = imask;
  while (true) {  // j runs over subsets of I (descending is fine, we accumulate)
    const uint32_t kfree = pmask & ~j;
    uint32_t k = kfree;
    while (true) {
      const uint32_t idx = j | (k >> 1) | k;
      const R contrib = ring_pow(mq, __builtin_popcount(k)) * ring_pow(qm1, __builtin_popcount(j));
      auto it = out.find(IndexSet(n, idx));
      if (it == out.end()) {
        out.emplace(IndexSet(n, idx), contrib);
      } else {
        it->second = it->second + contrib;
        if (it->second.is_zero()) out.erase(it);
      }
      if (k == 0) break;
      k = (k - 1) & kfree;
    }
    if (j == 0) break;
    j = (j - 1) & imask;
  }
  return out;
}

// Product rule: the quasi-shuffle product of two universal functions equals
// the sum of universal functions over all coshuffles of their indices.
template <Ring R>
bool product_rule_check(const Permutation& pi, const Composition& alpha, const Permutation& sigma,
                        const Composition& beta, const R& q) {
  QSymElement<R> lhs = quasi_shuffle_product(universal(pi, alpha, q), universal(sigma, beta, q));
  QSymElement<R> rhs;
  for (const auto& [tau, gamma] : coshuffles(pi, alpha, sigma, beta)) {
    rhs = rhs + universal(tau, gamma, q);
  }
  return lhs == rhs;
}

// Splitting coproduct of a universal function: standardised prefixes tensor
// standardised suffixes, which must agree with deconcatenating its monomial
// expansion.
template <Ring R>
bool coproduct_check(const Permutation& pi, const Composition& alpha, const R& q) {
  const int n = pi.size();
  if (n != alpha.length()) throw std::invalid_argument("coproduct_check: length mismatch");
  TensorElement<R> rhs;
  for (int i = 0; i <= n; ++i) {
    Permutation pre = standardize(std::vector<int>(pi.word.begin(), pi.word.begin() + i));
    Permutation suf = standardize(std::vector<int>(pi.word.begin() + i, pi.word.end()));
    Composition apre(std::vector<int>(alpha.parts.begin(), alpha.parts.begin() + i));
    Composition asuf(std::vector<int>(alpha.parts.begin() + i, alpha.parts.end()));
    const QSymElement<R> left = universal(pre, apre, q);
    const QSymElement<R> right = universal(suf, asuf, q);
    for (const auto& [a, ca] : left.terms()) {
      for (const auto& [b, cb] : right.terms()) tensor_add(rhs, a, b, ca * cb);
    }
  }
  return deconcatenation_coproduct(universal(pi, alpha, q)) == rhs;
}

// Counit axioms: pairing one tensor leg with the coefficient of the empty
// composition returns the original element.
template <Ring R>
bool counit_check(const Permutation& pi, const Composition& alpha, const R& q) {
  const QSymElement<R> u = universal(pi, alpha, q);
  TensorElement<R> delta = deconcatenation_coproduct(u);
  QSymElement<R> left_collapsed, right_collapsed;
  for (const auto& [key, c] : delta) {
    if (key.first.length() == 0) left_collapsed.add_term(key.second, c);
    if (key.second.length() == 0) right_collapsed.add_term(key.first, c);
  }
  return left_collapsed == u && right_collapsed == u;
}

}  // namespace qsym
