// Labelled weighted posets and enriched P-partitions over the signed
// alphabet -1 < 1 < -2 < 2 < ..., with the q-weighted generating function
// enumerated by brute force. This is the semantic ground truth the closed
// formulas elsewhere are tested against, so it stays deliberately simple.
#pragma once

#include <utility>
#include <vector>

#include "qsym/combinatorics.hpp"
#include "qsym/parallel.hpp"
#include "qsym/qsym_element.hpp"
#include "qsym/ring.hpp"

namespace qsym {

// A value +-k of the signed alphabet; ordered by magnitude with the negative
// copy first.
struct SignedValue {
  int magnitude = 1;
  bool negative = false;

  friend bool operator==(const SignedValue&, const SignedValue&) = default;
  friend bool operator<(const SignedValue& a, const SignedValue& b) {
    if (a.magnitude != b.magnitude) return a.magnitude < b.magnitude;
    return a.negative && !b.negative;
  }
};

class LabelledWeightedPoset {
 public:
  // covers lists pairs (i, j) meaning i comes below j; weights are indexed
  // by vertex label 1..n.
  LabelledWeightedPoset(int n, std::vector<std::pair<int, int>> covers, std::vector<int> weights);

  int size() const { return n_; }
  int weight(int v) const { return weights_[static_cast<size_t>(v - 1)]; }
  const std::vector<int>& weights() const { return weights_; }
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }
  // Transitive closure of the cover relation.
  bool less(int u, int v) const { return less_[static_cast<size_t>(u - 1)][static_cast<size_t>(v - 1)]; }

 private:
  int n_;
  std::vector<std::pair<int, int>> covers_;
  std::vector<int> weights_;
  std::vector<std::vector<bool>> less_;
};

// Both compatibility conditions of an enriched assignment: along every
// related pair the values weakly increase, ties being positive when the
// labels increase and negative when they decrease.
bool is_enriched_ppartition(const LabelledWeightedPoset& poset, const std::vector<SignedValue>& f);

// The chain carrying pi's letters in order with the parts of alpha as
// weights.
LabelledWeightedPoset chain_poset(const Permutation& pi, const Composition& alpha);

// All label sequences compatible with the order, by backtracking.
std::vector<Permutation> linear_extensions(const LabelledWeightedPoset& poset);

namespace detail {

// Vertex order used for pruning: any linear extension works.
std::vector<int> extension_order(const LabelledWeightedPoset& poset);

template <Ring R>
void gamma_enumerate(const LabelledWeightedPoset& poset, const std::vector<int>& order, int depth,
                     std::vector<SignedValue>& f, std::vector<int>& exps, int neg_count, int alphabet,
                     const std::vector<R>& q_powers, TruncatedPolynomial<R>& out) {
  const int n = poset.size();
  if (depth == n) {
    out.add_term(exps, q_powers[static_cast<size_t>(neg_count)]);
    return;
  }
  const int v = order[static_cast<size_t>(depth)];
  for (int mag = 1; mag <= alphabet; ++mag) {
    for (int s = 0; s < 2; ++s) {
      SignedValue val{mag, s == 0};
      f[static_cast<size_t>(v - 1)] = val;
      // check constraints against already assigned vertices
      bool ok = true;
      for (int d = 0; d < depth && ok; ++d) {
        const int u = order[static_cast<size_t>(d)];
        const SignedValue& fu = f[static_cast<size_t>(u - 1)];
        if (poset.less(u, v)) {
          if (!(fu < val || (fu == val && (u < v ? !val.negative : val.negative)))) ok = false;
        } else if (poset.less(v, u)) {
          if (!(val < fu || (val == fu && (v < u ? !val.negative : val.negative)))) ok = false;
        }
      }
      if (!ok) continue;
      exps[static_cast<size_t>(mag - 1)] += poset.weight(v);
      gamma_enumerate(poset, order, depth + 1, f, exps, neg_count + (val.negative ? 1 : 0),
                      alphabet, q_powers, out);
      exps[static_cast<size_t>(mag - 1)] -= poset.weight(v);
    }
  }
}

}  // namespace detail

// Sum over enriched assignments with magnitudes bounded by the alphabet size
// of q^{#negative values} times the product of x_{|f(v)|}^{weight(v)}.
// The search is split on the first vertex's value when run in parallel.
template <Ring R>
TruncatedPolynomial<R> gamma_q(const LabelledWeightedPoset& poset, int alphabet, const R& q,
                               Exec exec = Exec::openmp) {
  if (alphabet < 1) throw std::invalid_argument("gamma_q: alphabet bound must be positive");
  const int n = poset.size();
  std::vector<R> q_powers;
  q_powers.reserve(static_cast<size_t>(n) + 1);
  q_powers.emplace_back(1L);
  for (int i = 1; i <= n; ++i) q_powers.push_back(q_powers.back() * q);

  const std::vector<int> order = detail::extension_order(poset);
  if (n == 0) {
    TruncatedPolynomial<R> out(alphabet);
    out.add_term(std::vector<int>(static_cast<size_t>(alphabet), 0), R(1L));
    return out;
  }

  // One branch per value of the first vertex.
  const int branches = 2 * alphabet;
  std::vector<TruncatedPolynomial<R>> partial(static_cast<size_t>(branches),
                                              TruncatedPolynomial<R>(alphabet));
  auto run_branch = [&](int b) {
    const int mag = b / 2 + 1;
    const bool neg = (b % 2) == 0;
    const int v = order[0];
    std::vector<SignedValue> f(static_cast<size_t>(n));
    std::vector<int> exps(static_cast<size_t>(alphabet), 0);
    f[static_cast<size_t>(v - 1)] = SignedValue{mag, neg};
    exps[static_cast<size_t>(mag - 1)] += poset.weight(v);
    detail::gamma_enumerate(poset, order, 1, f, exps, neg ? 1 : 0, alphabet, q_powers,
                            partial[static_cast<size_t>(b)]);
  };
  if (exec == Exec::openmp) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int b = 0; b < branches; ++b) run_branch(b);
  } else {
    for (int b = 0; b < branches; ++b) run_branch(b);
  }
  TruncatedPolynomial<R> out(alphabet);
  for (const auto& part : partial) out = out + part;
  return out;
}

}  // namespace qsym
