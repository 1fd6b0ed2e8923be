#include "qsym/matrix.hpp"

namespace qsym {

std::vector<KernelDimensionRow> kernel_dimension_table(int p, int n_max, Exec exec) {
  if (p < 1) throw std::invalid_argument("kernel_dimension_table: p must be positive");
  if (n_max < 1 || n_max > 16) throw std::invalid_argument("kernel_dimension_table: n_max out of range");
  const CyclotomicNumber q = rho(p);
  std::vector<KernelDimensionRow> table;
  std::vector<long long> dim(static_cast<size_t>(n_max) + 1, 0);  // dim[0] = 0, empty matrix
  for (int n = 1; n <= n_max; ++n) {
    const ExactMatrix<CyclotomicNumber> b = transition_matrix_direct(n, q, exec);
    const int r = rank(b, exec);
    KernelDimensionRow row;
    row.n = n;
    row.dim_eliminated = b.cols() - r;
    dim[static_cast<size_t>(n)] = row.dim_eliminated;
    if (n <= p) {
      row.dim_recurrence = 0;
    } else {
      long long acc = 0;
      for (int k = 1; k <= p + 1 && k <= n; ++k) acc += dim[static_cast<size_t>(n - k)];
      if (n > p + 1) acc += 1ll << (n - p - 2);
      row.dim_recurrence = acc;
    }
    if (row.dim_recurrence == row.dim_eliminated) {
      row.status = KernelRowStatus::match;
    } else if (n == p + 1 && row.dim_eliminated == 1 && row.dim_recurrence == 0) {
      // The literal formula's indicator vanishes at n = p+1 although the
      // matrix there always has a one-dimensional kernel.
      row.status = KernelRowStatus::expected_discrepancy;
    } else {
      row.status = KernelRowStatus::mismatch;
    }
    table.push_back(row);
  }
  return table;
}

}  // namespace qsym
