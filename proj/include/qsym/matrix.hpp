// Dense matrices over an exact ring, indexed by subsets in reverse
// lexicographic order, with the two constructions of the basis-transition
// matrix and exact rank/kernel computation.
//
// Elimination over a field uses cross-multiplied row updates with content
// normalization (no fraction blow-up); over a polynomial ring it falls back
// to fraction-free (Bareiss) elimination. Row updates within one pivot step
// are independent, which is where the OpenMP parallelism lives; the serial
// path is kept as the reference.
#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "qsym/bases.hpp"
#include "qsym/combinatorics.hpp"
#include "qsym/cyclotomic.hpp"
#include "qsym/parallel.hpp"
#include "qsym/ring.hpp"

namespace qsym {

// Subsets of [n-1] in reverse lexicographic order of their decreasing words,
// which coincides with ascending order of the bit masks.
inline std::vector<IndexSet> subset_order(int n) {
  if (n < 1) throw std::invalid_argument("subset_order: n must be positive");
  const uint32_t full = IndexSet::full_mask(n);
  std::vector<IndexSet> out;
  out.reserve(static_cast<size_t>(full) + 1);
  for (uint32_t m = 0;; ++m) {
    out.emplace_back(n, m);
    if (m == full) break;
  }
  return out;
}

template <Ring R>
class ExactMatrix {
 public:
  ExactMatrix() : rows_(0), cols_(0) {}
  ExactMatrix(int rows, int cols)
      : rows_(rows), cols_(cols),
        a_(static_cast<size_t>(rows) * static_cast<size_t>(cols), R(0L)) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("ExactMatrix: negative dimension");
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  R& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  const R& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

  const std::vector<IndexSet>& row_sets() const { return row_sets_; }
  const std::vector<IndexSet>& col_sets() const { return col_sets_; }
  void set_index_sets(std::vector<IndexSet> rows, std::vector<IndexSet> cols) {
    row_sets_ = std::move(rows);
    col_sets_ = std::move(cols);
  }

  // Matrix with the chosen columns, keeping all rows.
  ExactMatrix restricted_columns(const std::vector<int>& keep) const {
    ExactMatrix out(rows_, static_cast<int>(keep.size()));
    for (int r = 0; r < rows_; ++r) {
      for (size_t c = 0; c < keep.size(); ++c) out.at(r, static_cast<int>(c)) = at(r, keep[c]);
    }
    return out;
  }

  // One extra column appended on the right.
  ExactMatrix augmented(const std::vector<R>& column) const {
    if (static_cast<int>(column.size()) != rows_) {
      throw std::invalid_argument("ExactMatrix: augmented column size mismatch");
    }
    ExactMatrix out(rows_, cols_ + 1);
    for (int r = 0; r < rows_; ++r) {
      for (int c = 0; c < cols_; ++c) out.at(r, c) = at(r, c);
      out.at(r, cols_) = column[static_cast<size_t>(r)];
    }
    return out;
  }

  friend bool operator==(const ExactMatrix& x, const ExactMatrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }
  friend bool operator!=(const ExactMatrix& x, const ExactMatrix& y) { return !(x == y); }

 private:
  int rows_, cols_;
  std::vector<R> a_;
  std::vector<IndexSet> row_sets_, col_sets_;
};

// --- transition matrix ------------------------------------------------------

// Column I carries the expansion of the q-fundamental indexed by I over the
// enriched q-monomial family; built column by column, columns being
// independent work items.
template <Ring R>
ExactMatrix<R> transition_matrix_direct(int n, const R& q, Exec exec = Exec::openmp) {
  if (n < 0) throw std::invalid_argument("transition_matrix_direct: negative n");
  if (n == 0) return ExactMatrix<R>();
  const std::vector<IndexSet> order = subset_order(n);
  const int size = static_cast<int>(order.size());
  ExactMatrix<R> out(size, size);
  auto fill_column = [&](int c) {
    for (const auto& [row_set, coeff] : fundamental_in_eta_basis(n, order[static_cast<size_t>(c)], q)) {
      // Ascending-mask ordering makes the row position the mask itself.
      out.at(static_cast<int>(row_set.mask), c) = coeff;
    }
  };
  if (exec == Exec::openmp) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int c = 0; c < size; ++c) fill_column(c);
  } else {
    for (int c = 0; c < size; ++c) fill_column(c);
  }
  out.set_index_sets(order, order);
  return out;
}

namespace detail {
template <Ring R>
using Grid = std::vector<std::vector<R>>;

template <Ring R>
Grid<R> scaled(const Grid<R>& g, const R& s) {
  Grid<R> out = g;
  for (auto& row : out) {
    for (auto& x : row) x = s * x;
  }
  return out;
}

// [[tl, tr], [bl, br]] with matching block sizes.
template <Ring R>
Grid<R> assemble(const Grid<R>& tl, const Grid<R>& tr, const Grid<R>& bl, const Grid<R>& br) {
  const size_t top = tl.size(), bottom = bl.size();
  Grid<R> out;
  out.reserve(top + bottom);
  for (size_t r = 0; r < top; ++r) {
    std::vector<R> row = tl[r];
    row.insert(row.end(), tr[r].begin(), tr[r].end());
    out.push_back(std::move(row));
  }
  for (size_t r = 0; r < bottom; ++r) {
    std::vector<R> row = bl[r];
    row.insert(row.end(), br[r].begin(), br[r].end());
    out.push_back(std::move(row));
  }
  return out;
}

template <Ring R>
Grid<R> zero_grid(size_t rows, size_t cols) {
  return Grid<R>(rows, std::vector<R>(cols, R(0L)));
}
}  // namespace detail

// The same matrix from its block recurrence: the top half repeats the
// previous matrix twice, and the diagonal blocks satisfy their own two-block
// recursion.
template <Ring R>
ExactMatrix<R> transition_matrix_recursive(int n, const R& q) {
  if (n < 0) throw std::invalid_argument("transition_matrix_recursive: negative n");
  if (n == 0) return ExactMatrix<R>();
  using detail::Grid;
  const R qm1 = q - R(1L);
  const R mq = -q;
  std::vector<Grid<R>> B(static_cast<size_t>(n) + 1), A(static_cast<size_t>(n) + 1);
  B[1] = {{R(1L)}};
  if (n >= 1) A[1] = {{R(1L)}};
  if (n >= 2) A[2] = {{qm1}};
  for (int k = 2; k <= n; ++k) {
    if (k >= 3) {
      const Grid<R> s = detail::scaled(B[static_cast<size_t>(k - 2)], qm1);
      A[static_cast<size_t>(k)] = detail::assemble(
          s, s, detail::scaled(B[static_cast<size_t>(k - 2)], mq),
          detail::scaled(A[static_cast<size_t>(k - 1)], qm1));
    }
    const Grid<R>& prev = B[static_cast<size_t>(k - 1)];
    const Grid<R>& diag = A[static_cast<size_t>(k)];
    B[static_cast<size_t>(k)] = detail::assemble(
        prev, prev, detail::zero_grid<R>(diag.size(), prev.size()), diag);
  }
  const Grid<R>& g = B[static_cast<size_t>(n)];
  ExactMatrix<R> out(static_cast<int>(g.size()), static_cast<int>(g.size()));
  for (size_t r = 0; r < g.size(); ++r) {
    for (size_t c = 0; c < g.size(); ++c) out.at(static_cast<int>(r), static_cast<int>(c)) = g[r][c];
  }
  out.set_index_sets(subset_order(n), subset_order(n));
  return out;
}

// Diagonal block: the transition among sets with a fixed maximum, which does
// not depend on the ambient degree.
template <Ring R>
ExactMatrix<R> transition_diagonal_block(int k, const R& q) {
  if (k < 1) throw std::invalid_argument("transition_diagonal_block: k must be positive");
  // Extract from the recursive build of size k.
  ExactMatrix<R> b = transition_matrix_recursive(k, q);
  const int size = k <= 2 ? 1 : (1 << (k - 2));
  const int offset = b.cols() - size;
  ExactMatrix<R> out(size, size);
  for (int r = 0; r < size; ++r) {
    for (int c = 0; c < size; ++c) out.at(r, c) = b.at(offset + r, offset + c);
  }
  return out;
}

// --- elimination -------------------------------------------------------------

namespace detail {

// Hook for keeping entries small during cross-multiplied updates; rings
// without a useful notion of content just skip it.
template <class R>
inline void normalize_row_content(std::vector<R>&) {}

inline void rational_content(const Rational& x, BigInt& num_gcd, BigInt& den_lcm) {
  if (x.is_zero()) return;
  BigInt num = x.numerator();
  if (num.sign() < 0) num = -num;
  num_gcd = num_gcd.is_zero() ? num : BigInt::gcd(num_gcd, num);
  const BigInt den = x.denominator();
  den_lcm = den_lcm.is_zero() ? den : den_lcm.exact_div(BigInt::gcd(den_lcm, den)) * den;
}

inline void normalize_row_content(std::vector<Rational>& row) {
  BigInt num_gcd(0), den_lcm(0);
  for (const auto& x : row) rational_content(x, num_gcd, den_lcm);
  if (num_gcd.is_zero()) return;
  const Rational factor(den_lcm, num_gcd);
  if (factor.is_one()) return;
  for (auto& x : row) x *= factor;
}

inline void normalize_row_content(std::vector<CyclotomicNumber>& row) {
  BigInt num_gcd(0), den_lcm(0);
  int conductor = 1;
  for (const auto& x : row) {
    if (x.conductor() != 1) conductor = x.conductor();
    for (const auto& c : x.coeffs()) rational_content(c, num_gcd, den_lcm);
  }
  if (num_gcd.is_zero()) return;
  const Rational factor(den_lcm, num_gcd);
  if (factor.is_one()) return;
  const CyclotomicNumber scale = CyclotomicNumber::constant(conductor, factor);
  for (auto& x : row) x = scale * x;
}

template <Ring R>
std::vector<std::vector<R>> to_rows(const ExactMatrix<R>& m) {
  std::vector<std::vector<R>> rows(static_cast<size_t>(m.rows()));
  for (int r = 0; r < m.rows(); ++r) {
    rows[static_cast<size_t>(r)].reserve(static_cast<size_t>(m.cols()));
    for (int c = 0; c < m.cols(); ++c) rows[static_cast<size_t>(r)].push_back(m.at(r, c));
  }
  return rows;
}

// Row echelon form via cross-multiplication (a*row_i - b*pivot), content
// normalized; returns the rank and (optionally) the pivot columns.
template <Ring R>
int echelon_rank(std::vector<std::vector<R>>& rows, int cols, Exec exec,
                 std::vector<int>* pivot_cols = nullptr) {
  const int nrows = static_cast<int>(rows.size());
  int rank = 0;
  for (int col = 0; col < cols && rank < nrows; ++col) {
    int pivot = -1;
    for (int r = rank; r < nrows; ++r) {
      if (!rows[static_cast<size_t>(r)][static_cast<size_t>(col)].is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[static_cast<size_t>(rank)], rows[static_cast<size_t>(pivot)]);
    if (pivot_cols) pivot_cols->push_back(col);
    const std::vector<R>& prow = rows[static_cast<size_t>(rank)];
    const R& a = prow[static_cast<size_t>(col)];
    auto update = [&](int i) {
      std::vector<R>& row = rows[static_cast<size_t>(i)];
      const R b = row[static_cast<size_t>(col)];
      if (b.is_zero()) return;
      for (int j = col; j < cols; ++j) {
        row[static_cast<size_t>(j)] =
            a * row[static_cast<size_t>(j)] - b * prow[static_cast<size_t>(j)];
      }
      normalize_row_content(row);
    };
    if (exec == Exec::openmp) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
      for (int i = rank + 1; i < nrows; ++i) update(i);
    } else {
      for (int i = rank + 1; i < nrows; ++i) update(i);
    }
    ++rank;
  }
  return rank;
}

// Fraction-free elimination for rings with exact division only (polynomial
// entries): two-step Bareiss, every division exact.
template <Ring R>
int bareiss_rank(std::vector<std::vector<R>>& rows, int cols, Exec exec) {
  const int nrows = static_cast<int>(rows.size());
  int rank = 0;
  R prev(1L);
  for (int col = 0; col < cols && rank < nrows; ++col) {
    int pivot = -1;
    for (int r = rank; r < nrows; ++r) {
      if (!rows[static_cast<size_t>(r)][static_cast<size_t>(col)].is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[static_cast<size_t>(rank)], rows[static_cast<size_t>(pivot)]);
    const std::vector<R>& prow = rows[static_cast<size_t>(rank)];
    const R a = prow[static_cast<size_t>(col)];
    auto update = [&](int i) {
      std::vector<R>& row = rows[static_cast<size_t>(i)];
      const R b = row[static_cast<size_t>(col)];
      for (int j = col; j < cols; ++j) {
        row[static_cast<size_t>(j)] =
            (a * row[static_cast<size_t>(j)] - b * prow[static_cast<size_t>(j)]).exact_div(prev);
      }
    };
    if (exec == Exec::openmp) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
      for (int i = rank + 1; i < nrows; ++i) update(i);
    } else {
      for (int i = rank + 1; i < nrows; ++i) update(i);
    }
    prev = a;
    ++rank;
  }
  return rank;
}

}  // namespace detail

// Exact rank; the elimination flavour follows the ring (field vs polynomial).
template <Ring R>
int rank(const ExactMatrix<R>& m, Exec exec = Exec::openmp) {
  if (m.empty()) return 0;
  auto rows = detail::to_rows(m);
  if constexpr (FieldRing<R>) {
    return detail::echelon_rank(rows, m.cols(), exec);
  } else {
    return detail::bareiss_rank(rows, m.cols(), exec);
  }
}

// Basis of the right kernel over a field; every returned vector annihilates
// the matrix exactly.
template <FieldRing R>
std::vector<std::vector<R>> kernel_basis(const ExactMatrix<R>& m, Exec exec = Exec::openmp) {
  if (m.empty()) return {};
  auto rows = detail::to_rows(m);
  std::vector<int> pivot_cols;
  const int rank_m = detail::echelon_rank(rows, m.cols(), exec, &pivot_cols);
  // Back-substitute to reduced form: clear entries above each pivot and
  // rescale pivots to 1.
  for (int r = rank_m - 1; r >= 0; --r) {
    const int pc = pivot_cols[static_cast<size_t>(r)];
    const R inv = rows[static_cast<size_t>(r)][static_cast<size_t>(pc)].inverse();
    for (int j = pc; j < m.cols(); ++j) {
      rows[static_cast<size_t>(r)][static_cast<size_t>(j)] =
          inv * rows[static_cast<size_t>(r)][static_cast<size_t>(j)];
    }
    for (int i = 0; i < r; ++i) {
      const R f = rows[static_cast<size_t>(i)][static_cast<size_t>(pc)];
      if (f.is_zero()) continue;
      for (int j = pc; j < m.cols(); ++j) {
        rows[static_cast<size_t>(i)][static_cast<size_t>(j)] =
            rows[static_cast<size_t>(i)][static_cast<size_t>(j)] -
            f * rows[static_cast<size_t>(r)][static_cast<size_t>(j)];
      }
    }
  }
  std::vector<bool> is_pivot(static_cast<size_t>(m.cols()), false);
  for (int c : pivot_cols) is_pivot[static_cast<size_t>(c)] = true;
  std::vector<std::vector<R>> basis;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[static_cast<size_t>(f)]) continue;
    std::vector<R> v(static_cast<size_t>(m.cols()), R(0L));
    v[static_cast<size_t>(f)] = R(1L);
    for (int r = 0; r < rank_m; ++r) {
      v[static_cast<size_t>(pivot_cols[static_cast<size_t>(r)])] =
          -rows[static_cast<size_t>(r)][static_cast<size_t>(f)];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

// Linear solvability of M x = b, by comparing ranks of the plain and
// augmented matrices.
template <FieldRing R>
bool in_column_span(const ExactMatrix<R>& m, const std::vector<R>& b, Exec exec = Exec::openmp) {
  return rank(m, exec) == rank(m.augmented(b), exec);
}

// --- coefficient pair --------------------------------------------------------

// The left-vector iteration (alpha, beta) <- (alpha, beta) * [[q-1, q],[1, 0]]
// starting from (0, 1).
template <Ring R>
std::pair<R, R> coefficient_sequence(int n, const R& q) {
  if (n < 0) throw std::invalid_argument("coefficient_sequence: negative index");
  R alpha(0L), beta(1L);
  const R qm1 = q - R(1L);
  for (int i = 0; i < n; ++i) {
    R next_alpha = alpha * qm1 + beta;
    R next_beta = alpha * q;
    alpha = std::move(next_alpha);
    beta = std::move(next_beta);
  }
  return {alpha, beta};
}

// --- kernel dimension table ---------------------------------------------------

enum class KernelRowStatus { match, expected_discrepancy, mismatch };

struct KernelDimensionRow {
  int n = 0;
  int dim_eliminated = 0;       // 2^{n-1} - rank, computed by elimination
  long long dim_recurrence = 0;  // value predicted by the literal recurrence
  KernelRowStatus status = KernelRowStatus::match;
};

// Kernel dimensions of the transition matrix at q = rho_p for n = 1..n_max,
// checked against the closed recurrence. The n = p+1 entry is a documented
// discrepancy: elimination yields 1 while the literal formula yields 0.
std::vector<KernelDimensionRow> kernel_dimension_table(int p, int n_max, Exec exec = Exec::openmp);

}  // namespace qsym
