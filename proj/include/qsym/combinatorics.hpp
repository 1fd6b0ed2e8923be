// Subsets of [n-1], compositions, permutations and their statistics:
// descents, peaks, extended peaks, counting and the standard bijections.
#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace qsym {

// A subset of [n-1] inside the ambient ground set of size n. Element i is
// bit i-1 of the mask, so ascending mask order is exactly the reverse
// lexicographic order on decreasing words used to index transition matrices.
struct IndexSet {
  int ambient = 1;
  uint32_t mask = 0;

  IndexSet() = default;
  IndexSet(int n, uint32_t m);
  IndexSet(int n, std::initializer_list<int> members);
  static IndexSet from_members(int n, const std::vector<int>& members);

  bool contains(int i) const { return i >= 1 && i < ambient && (mask >> (i - 1)) & 1u; }
  int size() const { return __builtin_popcount(mask); }
  bool empty() const { return mask == 0; }
  std::vector<int> members() const;  // ascending
  int max_or_zero() const { return mask == 0 ? 0 : 32 - __builtin_clz(mask); }

  bool subset_of(const IndexSet& other) const {
    return ambient == other.ambient && (mask & ~other.mask) == 0;
  }
  IndexSet unite(const IndexSet& o) const;
  IndexSet intersect(const IndexSet& o) const;
  IndexSet complement() const { return IndexSet(ambient, ~mask & full_mask(ambient)); }
  // {i-1 : i in I, i >= 2}
  IndexSet shifted_down() const { return IndexSet(ambient, mask >> 1); }

  static uint32_t full_mask(int n) { return n >= 33 ? ~0u : ((n <= 1) ? 0u : ((1u << (n - 1)) - 1u)); }

  std::string str() const;  // "{}", "{1,3}"

  friend bool operator==(const IndexSet& a, const IndexSet& b) {
    return a.ambient == b.ambient && a.mask == b.mask;
  }
  friend auto operator<=>(const IndexSet& a, const IndexSet& b) {
    if (auto c = a.ambient <=> b.ambient; c != 0) return c;
    return a.mask <=> b.mask;
  }
};

// A finite sequence of positive parts; the empty composition is the unit of
// degree 0.
struct Composition {
  std::vector<int> parts;

  Composition() = default;
  explicit Composition(std::vector<int> p);
  Composition(std::initializer_list<int> p);

  int weight() const;
  int length() const { return static_cast<int>(parts.size()); }
  std::string str() const;  // "(2,1)"

  friend bool operator==(const Composition&, const Composition&) = default;
  friend auto operator<=>(const Composition&, const Composition&) = default;
};

// A rearrangement of 1..n stored as its one-line word.
struct Permutation {
  std::vector<int> word;

  Permutation() = default;
  explicit Permutation(std::vector<int> w);
  Permutation(std::initializer_list<int> w);
  static Permutation identity(int n);

  int size() const { return static_cast<int>(word.size()); }
  std::string str() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;
};

// --- statistics -----------------------------------------------------------

// {i : pi(i) > pi(i+1)}
IndexSet descent_set(const Permutation& pi);

// Interior strict local maxima; never contains 1 nor two consecutive values.
IndexSet peak_set(const Permutation& pi);

// Descents i that start within the first p-1 positions or sit at distance
// <= p above some positive non-descent. Interpolates between the peak set
// (p = 1) and the full descent set (p >= n).
IndexSet extended_peak_statistic(const Permutation& pi, int p);

// True when every maximal run of consecutive integers in I united with {0}
// has length at most p.
bool is_extended_peak_set(const IndexSet& I, int p);

// All valid sets for the given (n, p) in ascending mask (reverse-lex) order.
std::vector<IndexSet> enumerate_extended_peak_sets(int n, int p);

// Counting recurrence: 2^{n-1} for 1 <= n <= p, otherwise the sum of the
// previous p+1 values (with index 0 contributing nothing).
unsigned long long count_extended_peak_sets(int n, int p);

// Left endpoints of runs of I, excluding 1.
IndexSet peak_set_of_subset(const IndexSet& I);

// Number of v-element subsets of an interval of length p that contain no two
// consecutive elements and avoid the interval's first element (the anchor
// just below the interval counts as occupied). Equals C(p-v, v).
unsigned long long count_lacunar_subsets(int p, int v);

unsigned long long binomial(int n, int k);

// --- bijections and constructions -----------------------------------------

// I = {d_1 < ... < d_k} inside [s-1]  ->  (d_1, d_2-d_1, ..., s-d_k).
Composition composition_of_subset(int s, const IndexSet& I);
// Partial sums of the parts, except the last.
IndexSet subset_of_composition(const Composition& alpha);

// A permutation whose descent set is exactly I: split positions into blocks
// at I and hand out the largest unused values block by block, increasing
// inside each block.
Permutation canonical_permutation_with_descents(int n, const IndexSet& I);

// The permutation with the same relative order as the (distinct) entries.
Permutation standardize(const std::vector<int>& word);

// All interleavings of (pi, alpha) with (sigma, beta): sigma's letters are
// shifted by |pi| and the compositions ride along the same shuffle.
std::vector<std::pair<Permutation, Composition>> coshuffles(const Permutation& pi,
                                                            const Composition& alpha,
                                                            const Permutation& sigma,
                                                            const Composition& beta);

std::vector<Permutation> all_permutations(int n);
std::vector<Composition> compositions_of_weight(int weight);            // all lengths
std::vector<Composition> compositions_with_length(int length, int max_weight);

}  // namespace qsym
