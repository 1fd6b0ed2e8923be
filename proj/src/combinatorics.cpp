#include "qsym/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qsym {

IndexSet::IndexSet(int n, uint32_t m) : ambient(n), mask(m) {
  if (n < 1 || n > 32) throw std::invalid_argument("IndexSet: ambient size out of range");
  if (m & ~full_mask(n)) throw std::invalid_argument("IndexSet: member outside [1, n-1]");
}

IndexSet::IndexSet(int n, std::initializer_list<int> members) : IndexSet(n, 0u) {
  for (int i : members) {
    if (i < 1 || i > n - 1) throw std::invalid_argument("IndexSet: member outside [1, n-1]");
    mask |= 1u << (i - 1);
  }
}

IndexSet IndexSet::from_members(int n, const std::vector<int>& members) {
  IndexSet s(n, 0u);
  for (int i : members) {
    if (i < 1 || i > n - 1) throw std::invalid_argument("IndexSet: member outside [1, n-1]");
    s.mask |= 1u << (i - 1);
  }
  return s;
}

std::vector<int> IndexSet::members() const {
  std::vector<int> out;
  for (int i = 1; i < ambient; ++i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

IndexSet IndexSet::unite(const IndexSet& o) const {
  if (ambient != o.ambient) throw std::invalid_argument("IndexSet: ambient mismatch");
  return IndexSet(ambient, mask | o.mask);
}

IndexSet IndexSet::intersect(const IndexSet& o) const {
  if (ambient != o.ambient) throw std::invalid_argument("IndexSet: ambient mismatch");
  return IndexSet(ambient, mask & o.mask);
}

std::string IndexSet::str() const {
  std::string out = "{";
  bool first = true;
  for (int i : members()) {
    if (!first) out += ",";
    out += std::to_string(i);
    first = false;
  }
  return out + "}";
}

Composition::Composition(std::vector<int> p) : parts(std::move(p)) {
  for (int x : parts) {
    if (x < 1) throw std::invalid_argument("Composition: parts must be positive");
  }
}

Composition::Composition(std::initializer_list<int> p) : Composition(std::vector<int>(p)) {}

int Composition::weight() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::string Composition::str() const {
  std::string out = "(";
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(parts[i]);
  }
  return out + ")";
}

Permutation::Permutation(std::vector<int> w) : word(std::move(w)) {
  std::vector<bool> seen(word.size(), false);
  for (int x : word) {
    if (x < 1 || x > static_cast<int>(word.size()) || seen[x - 1]) {
      throw std::invalid_argument("Permutation: word is not a rearrangement of 1..n");
    }
    seen[x - 1] = true;
  }
}

Permutation::Permutation(std::initializer_list<int> w) : Permutation(std::vector<int>(w)) {}

Permutation Permutation::identity(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

std::string Permutation::str() const {
  std::string out;
  for (size_t i = 0; i < word.size(); ++i) {
    if (i) out += " ";
    out += std::to_string(word[i]);
  }
  return out;
}

IndexSet descent_set(const Permutation& pi) {
  const int n = pi.size();
  IndexSet d(std::max(n, 1), 0u);
  for (int i = 1; i < n; ++i) {
    if (pi.word[i - 1] > pi.word[i]) d.mask |= 1u << (i - 1);
  }
  return d;
}

IndexSet peak_set(const Permutation& pi) {
  const int n = pi.size();
  IndexSet s(std::max(n, 1), 0u);
  for (int i = 2; i < n; ++i) {
    if (pi.word[i - 2] < pi.word[i - 1] && pi.word[i - 1] > pi.word[i]) s.mask |= 1u << (i - 1);
  }
  return s;
}

IndexSet extended_peak_statistic(const Permutation& pi, int p) {
  if (p < 1) throw std::invalid_argument("extended_peak_statistic: p must be positive");
  IndexSet des = descent_set(pi);
  IndexSet out(des.ambient, 0u);
  for (int i : des.members()) {
    bool keep = i <= p - 1;
    for (int j = 1; !keep && j <= p; ++j) {
      // Only positions >= 1 count as non-descents; position 0 acts as a
      // permanent descent anchoring the first run.
      if (i - j >= 1 && !des.contains(i - j)) keep = true;
    }
    if (keep) out.mask |= 1u << (i - 1);
  }
  return out;
}

bool is_extended_peak_set(const IndexSet& I, int p) {
  if (p < 1) throw std::invalid_argument("is_extended_peak_set: p must be positive");
  // Track the length of the run of consecutive members ending at the current
  // position; 0 always counts as a member.
  int run = 1;
  for (int i = 1; i < I.ambient; ++i) {
    if (!I.contains(i)) continue;
    run = (i == 1 || I.contains(i - 1)) ? run + 1 : 1;
    if (run > p) return false;
  }
  return true;
}

std::vector<IndexSet> enumerate_extended_peak_sets(int n, int p) {
  if (n < 1) throw std::invalid_argument("enumerate_extended_peak_sets: n must be positive");
  std::vector<IndexSet> out;
  const uint32_t full = IndexSet::full_mask(n);
  for (uint32_t m = 0; ; ++m) {
    IndexSet s(n, m);
    if (is_extended_peak_set(s, p)) out.push_back(s);
    if (m == full) break;
  }
  return out;
}

unsigned long long count_extended_peak_sets(int n, int p) {
  if (p < 1) throw std::invalid_argument("count_extended_peak_sets: p must be positive");
  if (n < 0) throw std::invalid_argument("count_extended_peak_sets: n must be nonnegative");
  if (n == 0) return 0;
  if (n > 62) throw std::invalid_argument("count_extended_peak_sets: n too large");
  std::vector<unsigned long long> s(static_cast<size_t>(n) + 1, 0);
  for (int k = 1; k <= n; ++k) {
    if (k <= p) {
      s[k] = 1ull << (k - 1);
    } else {
      unsigned long long acc = 0;
      for (int j = 1; j <= p + 1 && j <= k; ++j) acc += s[k - j];
      s[k] = acc;
    }
  }
  return s[static_cast<size_t>(n)];
}

IndexSet peak_set_of_subset(const IndexSet& I) {
  IndexSet out(I.ambient, 0u);
  for (int i = 2; i < I.ambient; ++i) {
    if (I.contains(i) && !I.contains(i - 1)) out.mask |= 1u << (i - 1);
  }
  return out;
}

unsigned long long binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned long long r = 1;
  for (int i = 0; i < k; ++i) r = r * static_cast<unsigned long long>(n - i) / (i + 1);
  return r;
}

unsigned long long count_lacunar_subsets(int p, int v) {
  if (p < 0 || v < 0) throw std::invalid_argument("count_lacunar_subsets: negative argument");
  return binomial(p - v, v);
}

Composition composition_of_subset(int s, const IndexSet& I) {
  if (s < 1) throw std::invalid_argument("composition_of_subset: weight must be positive");
  if (I.ambient != s) throw std::invalid_argument("composition_of_subset: set not inside [s-1]");
  std::vector<int> parts;
  int prev = 0;
  for (int d : I.members()) {
    parts.push_back(d - prev);
    prev = d;
  }
  parts.push_back(s - prev);
  return Composition(std::move(parts));
}

IndexSet subset_of_composition(const Composition& alpha) {
  const int s = alpha.weight();
  if (s < 1) throw std::invalid_argument("subset_of_composition: empty composition");
  IndexSet out(s, 0u);
  int acc = 0;
  for (size_t i = 0; i + 1 < alpha.parts.size(); ++i) {
    acc += alpha.parts[i];
    out.mask |= 1u << (acc - 1);
  }
  return out;
}

Permutation canonical_permutation_with_descents(int n, const IndexSet& I) {
  if (I.ambient != n) throw std::invalid_argument("canonical_permutation_with_descents: ambient mismatch");
  std::vector<int> word(static_cast<size_t>(n));
  int next = n;  // largest unused value
  int start = 0;
  for (int pos = 1; pos <= n; ++pos) {
    bool block_end = pos == n || I.contains(pos);
    if (block_end) {
      // Fill positions start..pos-1 (0-based) increasingly with the largest
      // unused values.
      int len = pos - start;
      for (int k = 0; k < len; ++k) word[static_cast<size_t>(start + k)] = next - len + 1 + k;
      next -= len;
      start = pos;
    }
  }
  return Permutation(std::move(word));
}

Permutation standardize(const std::vector<int>& word) {
  std::vector<int> sorted = word;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("standardize: entries must be distinct");
  }
  std::vector<int> out(word.size());
  for (size_t i = 0; i < word.size(); ++i) {
    out[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), word[i]) -
                              sorted.begin()) + 1;
  }
  return Permutation(std::move(out));
}

namespace {
void coshuffle_rec(const std::vector<int>& a_word, const std::vector<int>& a_parts, size_t ia,
                   const std::vector<int>& b_word, const std::vector<int>& b_parts, size_t ib,
                   std::vector<int>& word, std::vector<int>& parts,
                   std::vector<std::pair<Permutation, Composition>>& out) {
  if (ia == a_word.size() && ib == b_word.size()) {
    out.emplace_back(Permutation(word), Composition(parts));
    return;
  }
  if (ia < a_word.size()) {
    word.push_back(a_word[ia]);
    parts.push_back(a_parts[ia]);
    coshuffle_rec(a_word, a_parts, ia + 1, b_word, b_parts, ib, word, parts, out);
    word.pop_back();
    parts.pop_back();
  }
  if (ib < b_word.size()) {
    word.push_back(b_word[ib]);
    parts.push_back(b_parts[ib]);
    coshuffle_rec(a_word, a_parts, ia, b_word, b_parts, ib + 1, word, parts, out);
    word.pop_back();
    parts.pop_back();
  }
}
}  // namespace

std::vector<std::pair<Permutation, Composition>> coshuffles(const Permutation& pi,
                                                            const Composition& alpha,
                                                            const Permutation& sigma,
                                                            const Composition& beta) {
  if (pi.size() != alpha.length() || sigma.size() != beta.length()) {
    throw std::invalid_argument("coshuffles: length mismatch");
  }
  std::vector<int> shifted = sigma.word;
  for (int& x : shifted) x += pi.size();
  std::vector<std::pair<Permutation, Composition>> out;
  std::vector<int> word, parts;
  coshuffle_rec(pi.word, alpha.parts, 0, shifted, beta.parts, 0, word, parts, out);
  return out;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> w(static_cast<size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(w));
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

std::vector<Composition> compositions_of_weight(int weight) {
  std::vector<Composition> out;
  if (weight == 0) {
    out.emplace_back();
    return out;
  }
  // Compositions of s correspond to subsets of [s-1].
  const uint32_t full = IndexSet::full_mask(weight);
  for (uint32_t m = 0; ; ++m) {
    out.push_back(composition_of_subset(weight, IndexSet(weight, m)));
    if (m == full) break;
  }
  return out;
}

std::vector<Composition> compositions_with_length(int length, int max_weight) {
  std::vector<Composition> out;
  for (int w = length; w <= max_weight; ++w) {
    for (const Composition& c : compositions_of_weight(w)) {
      if (c.length() == length) out.push_back(c);
    }
  }
  return out;
}

}  // namespace qsym
