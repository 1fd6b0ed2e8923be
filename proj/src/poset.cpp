#include "qsym/poset.hpp"

#include <algorithm>
#include <stdexcept>

namespace qsym {

LabelledWeightedPoset::LabelledWeightedPoset(int n, std::vector<std::pair<int, int>> covers,
                                             std::vector<int> weights)
    : n_(n), covers_(std::move(covers)), weights_(std::move(weights)) {
  if (n < 0) throw std::invalid_argument("LabelledWeightedPoset: negative size");
  if (static_cast<int>(weights_.size()) != n) {
    throw std::invalid_argument("LabelledWeightedPoset: weight count mismatch");
  }
  for (int w : weights_) {
    if (w < 1) throw std::invalid_argument("LabelledWeightedPoset: weights must be positive");
  }
  less_.assign(static_cast<size_t>(n), std::vector<bool>(static_cast<size_t>(n), false));
  for (const auto& [u, v] : covers_) {
    if (u < 1 || u > n || v < 1 || v > n || u == v) {
      throw std::invalid_argument("LabelledWeightedPoset: cover out of range");
    }
    less_[static_cast<size_t>(u - 1)][static_cast<size_t>(v - 1)] = true;
  }
  // Warshall closure.
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      if (!less_[static_cast<size_t>(i)][static_cast<size_t>(k)]) continue;
      for (int j = 0; j < n; ++j) {
        if (less_[static_cast<size_t>(k)][static_cast<size_t>(j)]) {
          less_[static_cast<size_t>(i)][static_cast<size_t>(j)] = true;
        }
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    if (less_[static_cast<size_t>(i)][static_cast<size_t>(i)]) {
      throw std::invalid_argument("LabelledWeightedPoset: relation contains a cycle");
    }
  }
}

bool is_enriched_ppartition(const LabelledWeightedPoset& poset, const std::vector<SignedValue>& f) {
  const int n = poset.size();
  if (static_cast<int>(f.size()) != n) {
    throw std::invalid_argument("is_enriched_ppartition: assignment size mismatch");
  }
  for (int u = 1; u <= n; ++u) {
    for (int v = 1; v <= n; ++v) {
      if (!poset.less(u, v)) continue;
      const SignedValue& fu = f[static_cast<size_t>(u - 1)];
      const SignedValue& fv = f[static_cast<size_t>(v - 1)];
      if (fu < fv) continue;
      if (fu == fv) {
        // Ties must be positive along label increases, negative along drops.
        if (u < v ? !fu.negative : fu.negative) continue;
      }
      return false;
    }
  }
  return true;
}

LabelledWeightedPoset chain_poset(const Permutation& pi, const Composition& alpha) {
  const int n = pi.size();
  if (n != alpha.length()) throw std::invalid_argument("chain_poset: length mismatch");
  std::vector<std::pair<int, int>> covers;
  covers.reserve(static_cast<size_t>(n > 0 ? n - 1 : 0));
  for (int i = 0; i + 1 < n; ++i) covers.emplace_back(pi.word[static_cast<size_t>(i)], pi.word[static_cast<size_t>(i + 1)]);
  std::vector<int> weights(static_cast<size_t>(n), 1);
  for (int i = 0; i < n; ++i) weights[static_cast<size_t>(pi.word[static_cast<size_t>(i)] - 1)] = alpha.parts[static_cast<size_t>(i)];
  return LabelledWeightedPoset(n, std::move(covers), std::move(weights));
}

namespace {
void extensions_rec(const LabelledWeightedPoset& poset, std::vector<int>& picked,
                    std::vector<bool>& used, std::vector<Permutation>& out) {
  const int n = poset.size();
  if (static_cast<int>(picked.size()) == n) {
    out.push_back(Permutation(picked));
    return;
  }
  for (int v = 1; v <= n; ++v) {
    if (used[static_cast<size_t>(v - 1)]) continue;
    bool minimal = true;
    for (int u = 1; u <= n && minimal; ++u) {
      if (!used[static_cast<size_t>(u - 1)] && poset.less(u, v)) minimal = false;
    }
    if (!minimal) continue;
    used[static_cast<size_t>(v - 1)] = true;
    picked.push_back(v);
    extensions_rec(poset, picked, used, out);
    picked.pop_back();
    used[static_cast<size_t>(v - 1)] = false;
  }
}
}  // namespace

std::vector<Permutation> linear_extensions(const LabelledWeightedPoset& poset) {
  std::vector<Permutation> out;
  std::vector<int> picked;
  std::vector<bool> used(static_cast<size_t>(poset.size()), false);
  extensions_rec(poset, picked, used, out);
  return out;
}

namespace detail {
std::vector<int> extension_order(const LabelledWeightedPoset& poset) {
  const int n = poset.size();
  std::vector<int> order;
  std::vector<bool> used(static_cast<size_t>(n), false);
  while (static_cast<int>(order.size()) < n) {
    for (int v = 1; v <= n; ++v) {
      if (used[static_cast<size_t>(v - 1)]) continue;
      bool minimal = true;
      for (int u = 1; u <= n && minimal; ++u) {
        if (!used[static_cast<size_t>(u - 1)] && poset.less(u, v)) minimal = false;
      }
      if (minimal) {
        used[static_cast<size_t>(v - 1)] = true;
        order.push_back(v);
        break;
      }
    }
  }
  return order;
}
}  // namespace detail

}  // namespace qsym
