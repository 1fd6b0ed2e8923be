#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qsym/combinatorics.hpp"

using namespace qsym;

namespace {

// Independent run-length filter used as the counting oracle: scans the mask
// bit by bit with 0 as an implicit member.
bool valid_by_scan(uint32_t mask, int n, int p) {
  int run = 1;  // the run currently ending at the previous seen member, {0} to start
  int prev = 0; // last member seen (0 is a member)
  for (int i = 1; i <= n - 1; ++i) {
    if (!(mask & (1u << (i - 1)))) continue;
    run = (i == prev + 1) ? run + 1 : 1;
    prev = i;
    if (run > p) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("descent and peak statistics of the worked permutation") {
  const Permutation pi{5, 4, 1, 6, 3, 2, 8, 7};
  CHECK(descent_set(pi) == IndexSet(8, {1, 2, 4, 5, 7}));
  CHECK(peak_set(pi) == IndexSet(8, {4, 7}));
  CHECK(extended_peak_statistic(pi, 1) == IndexSet(8, {4, 7}));
  CHECK(extended_peak_statistic(pi, 2) == IndexSet(8, {1, 4, 5, 7}));
  CHECK(extended_peak_statistic(pi, 3) == IndexSet(8, {1, 2, 4, 5, 7}));
}

TEST_CASE("statistics on trivial permutations") {
  CHECK(descent_set(Permutation{1, 2, 3, 4}).empty());
  CHECK(descent_set(Permutation{4, 3, 2, 1}) == IndexSet(4, {1, 2, 3}));
  CHECK(peak_set(Permutation{1, 2, 3, 4}).empty());
  CHECK(peak_set(Permutation{1, 3, 2}) == IndexSet(3, {2}));
}

TEST_CASE("extended peak statistic sandwich and validity") {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& pi : all_permutations(n)) {
      const IndexSet des = descent_set(pi);
      const IndexSet peaks = peak_set(pi);
      CHECK(peak_set_of_subset(des) == peaks);
      for (int p = 1; p <= 5; ++p) {
        const IndexSet ep = extended_peak_statistic(pi, p);
        CHECK(peaks.subset_of(ep));
        CHECK(ep.subset_of(des));
        CHECK(is_extended_peak_set(ep, p));
      }
      CHECK(extended_peak_statistic(pi, 1) == peaks);
      CHECK(extended_peak_statistic(pi, n) == des);
    }
  }
}

TEST_CASE("run-length membership") {
  CHECK(is_extended_peak_set(IndexSet(9, {1, 4, 5, 8}), 2));
  CHECK(!is_extended_peak_set(IndexSet(9, {1, 2, 4, 5, 8}), 2));
  CHECK(is_extended_peak_set(IndexSet(9, {4, 8}), 1));
  CHECK(is_extended_peak_set(IndexSet(9, {1, 2, 4, 5, 6, 8}), 3));
  CHECK(is_extended_peak_set(IndexSet(5, {}), 1));
  // the run through 0: [1, p] is never allowed
  CHECK(!is_extended_peak_set(IndexSet(5, {1}), 1));
  CHECK(!is_extended_peak_set(IndexSet(5, {1, 2}), 2));
}

TEST_CASE("enumeration order and small lists") {
  const auto e41 = enumerate_extended_peak_sets(4, 1);
  REQUIRE(e41.size() == 3);
  CHECK(e41[0] == IndexSet(4, {}));
  CHECK(e41[1] == IndexSet(4, {2}));
  CHECK(e41[2] == IndexSet(4, {3}));
  CHECK(enumerate_extended_peak_sets(2, 1) == std::vector<IndexSet>{IndexSet(2, {})});
  CHECK(enumerate_extended_peak_sets(1, 1) == std::vector<IndexSet>{IndexSet(1, {})});
}

TEST_CASE("counting recurrence against brute force") {
  unsigned long long fib[] = {1, 1, 2, 3, 5, 8, 13};
  for (int n = 1; n <= 7; ++n) CHECK(count_extended_peak_sets(n, 1) == fib[n - 1]);
  CHECK(count_extended_peak_sets(3, 2) == 3);
  CHECK(count_extended_peak_sets(3, 3) == 4);
  CHECK(count_extended_peak_sets(0, 1) == 0);
  for (int p = 1; p <= 5; ++p) {
    for (int n = 1; n <= 16; ++n) {
      unsigned long long by_scan = 0;
      for (uint32_t m = 0; m <= IndexSet::full_mask(n); ++m) {
        if (valid_by_scan(m, n, p)) ++by_scan;
        if (m == IndexSet::full_mask(n)) break;
      }
      CHECK(count_extended_peak_sets(n, p) == by_scan);
      CHECK(enumerate_extended_peak_sets(n, p).size() == by_scan);
    }
  }
}

TEST_CASE("peak set of a subset reads left run starts") {
  CHECK(peak_set_of_subset(IndexSet(4, {2})) == IndexSet(4, {2}));
  CHECK(peak_set_of_subset(IndexSet(4, {1, 2})) == IndexSet(4, {}));
  CHECK(peak_set_of_subset(IndexSet(4, {1, 3})) == IndexSet(4, {3}));
  CHECK(peak_set_of_subset(IndexSet(8, {1, 2, 4, 5, 7})) == IndexSet(8, {4, 7}));
}

TEST_CASE("lacunar window counts match the closed form") {
  CHECK(count_lacunar_subsets(3, 1) == 2);
  CHECK(count_lacunar_subsets(0, 0) == 1);
  CHECK(count_lacunar_subsets(4, 2) == 1);
  for (int p = 0; p <= 8; ++p) {
    for (int v = 0; v <= p; ++v) {
      // enumerate v-subsets of {1..p}, no two consecutive, avoiding 1
      unsigned long long count = 0;
      for (uint32_t m = 0; m < (1u << p); ++m) {
        if (__builtin_popcount(m) != v) continue;
        if (m & 1u) continue;
        if (m & (m << 1)) continue;
        ++count;
      }
      CHECK(count == count_lacunar_subsets(p, v));
    }
  }
}

TEST_CASE("subset and composition bijection") {
  CHECK(composition_of_subset(4, IndexSet(4, {1, 3})) == Composition({1, 2, 1}));
  CHECK(composition_of_subset(4, IndexSet(4, {})) == Composition({4}));
  CHECK(composition_of_subset(3, IndexSet(3, {1, 2})) == Composition({1, 1, 1}));
  CHECK_THROWS_AS(composition_of_subset(3, IndexSet(5, {4})), std::invalid_argument);
  for (int s = 1; s <= 10; ++s) {
    for (uint32_t m = 0;; ++m) {
      const IndexSet I(s, m);
      const Composition alpha = composition_of_subset(s, I);
      CHECK(alpha.weight() == s);
      CHECK(subset_of_composition(alpha) == I);
      if (m == IndexSet::full_mask(s)) break;
    }
  }
  // and the other direction on all compositions of weight <= 7
  for (int s = 1; s <= 7; ++s) {
    for (const auto& alpha : compositions_of_weight(s)) {
      CHECK(composition_of_subset(s, subset_of_composition(alpha)) == alpha);
    }
  }
}

TEST_CASE("canonical permutation with a given descent set") {
  CHECK(canonical_permutation_with_descents(4, IndexSet(4, {2})) == Permutation({3, 4, 1, 2}));
  CHECK(canonical_permutation_with_descents(5, IndexSet(5, {})) == Permutation::identity(5));
  CHECK(canonical_permutation_with_descents(4, IndexSet(4, {1, 2, 3})) == Permutation({4, 3, 2, 1}));
  for (int n = 1; n <= 8; ++n) {
    for (uint32_t m = 0;; ++m) {
      const IndexSet I(n, m);
      CHECK(descent_set(canonical_permutation_with_descents(n, I)) == I);
      if (m == IndexSet::full_mask(n)) break;
    }
  }
}

TEST_CASE("standardize") {
  CHECK(standardize({5, 2, 6}) == Permutation({2, 1, 3}));
  CHECK(standardize({}) == Permutation{});
  CHECK(standardize({4, 1}) == Permutation({2, 1}));
  CHECK_THROWS_AS(standardize({3, 3}), std::invalid_argument);
}

TEST_CASE("coshuffles") {
  const auto two = coshuffles(Permutation{1}, Composition{1}, Permutation{1}, Composition{1});
  REQUIRE(two.size() == 2);
  CHECK(two[0].first == Permutation({1, 2}));
  CHECK(two[0].second == Composition({1, 1}));
  CHECK(two[1].first == Permutation({2, 1}));
  CHECK(two[1].second == Composition({1, 1}));

  const auto lone = coshuffles(Permutation{}, Composition{}, Permutation{2, 1}, Composition{3, 1});
  REQUIRE(lone.size() == 1);
  CHECK(lone[0].first == Permutation({2, 1}));
  CHECK(lone[0].second == Composition({3, 1}));

  CHECK(coshuffles(Permutation{1, 2}, Composition{1, 1}, Permutation{2, 1}, Composition{1, 1}).size() == 6);
  // letters of the second permutation arrive shifted
  const auto mixed = coshuffles(Permutation{1}, Composition{2}, Permutation{1, 2}, Composition{1, 3});
  for (const auto& [tau, gamma] : mixed) {
    CHECK(tau.size() == 3);
    CHECK(gamma.length() == 3);
  }
  CHECK_THROWS_AS(coshuffles(Permutation{1}, Composition{1, 1}, Permutation{1}, Composition{1}),
                  std::invalid_argument);
}
