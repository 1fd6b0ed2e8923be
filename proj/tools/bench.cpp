// Benchmark comparing the OpenMP kernels against their serial references:
// transition-matrix construction, exact rank over a cyclotomic field, the
// vanishing sweep and the generating-function enumeration.
//
// Usage: qsym-bench [--quick]

#include <cstdio>
#include <cstring>

#include "qsym/matrix.hpp"
#include "qsym/poset.hpp"
#include "qsym/verify.hpp"

namespace {

using namespace qsym;

template <class Fn>
double timed(Fn&& fn) {
  const double t0 = wall_time();
  fn();
  return wall_time() - t0;
}

void report(const char* name, double serial, double openmp) {
  std::printf("%-32s serial %8.3f s   openmp %8.3f s   speedup %.2fx\n", name, serial, openmp,
              openmp > 0 ? serial / openmp : 0.0);
}

}  // namespace

int main(int argc, char** argv) {
  bool quick = false;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--quick") == 0) quick = true;
  }
  const int n_build = quick ? 6 : 8;
  const int n_rank = quick ? 7 : 9;
  const int n_sweep = quick ? 6 : 7;
  const int vars = quick ? 2 : 3;

  std::printf("workers: %d\n", worker_count());
  const QPolynomial q = q_variable();

  {
    ExactMatrix<QPolynomial> a, b;
    const double ts = timed([&] { a = transition_matrix_direct(n_build, q, Exec::serial); });
    const double tp = timed([&] { b = transition_matrix_direct(n_build, q, Exec::openmp); });
    if (a != b) {
      std::fprintf(stderr, "FAIL: serial and openmp builds differ\n");
      return 1;
    }
    char name[64];
    std::snprintf(name, sizeof name, "build matrix n=%d symbolic", n_build);
    report(name, ts, tp);
  }

  {
    const auto m = transition_matrix_direct(n_rank, rho(4), Exec::openmp);
    int rs = 0, rp = 0;
    const double ts = timed([&] { rs = rank(m, Exec::serial); });
    const double tp = timed([&] { rp = rank(m, Exec::openmp); });
    if (rs != rp) {
      std::fprintf(stderr, "FAIL: serial and openmp ranks differ\n");
      return 1;
    }
    char name[64];
    std::snprintf(name, sizeof name, "rank n=%d at rho_4 (rank %d)", n_rank, rs);
    report(name, ts, tp);
  }

  {
    verify::SuiteReport rs, rp;
    const double ts = timed([&] { rs = verify::run_suite("vanishing", n_sweep, 2, Exec::serial); });
    const double tp = timed([&] { rp = verify::run_suite("vanishing", n_sweep, 2, Exec::openmp); });
    if (!rs.passed() || !rp.passed()) {
      std::fprintf(stderr, "FAIL: vanishing sweep failed\n");
      return 1;
    }
    char name[64];
    std::snprintf(name, sizeof name, "vanishing sweep n<=%d p<=2", n_sweep);
    report(name, ts, tp);
  }

  {
    const auto poset = verify::cross_check_poset();
    TruncatedPolynomial<QPolynomial> gs(vars), gp(vars);
    const double ts = timed([&] { gs = gamma_q(poset, vars, q, Exec::serial); });
    const double tp = timed([&] { gp = gamma_q(poset, vars, q, Exec::openmp); });
    if (gs != gp) {
      std::fprintf(stderr, "FAIL: serial and openmp generating functions differ\n");
      return 1;
    }
    char name[64];
    std::snprintf(name, sizeof name, "gamma fixture vars=%d", vars);
    report(name, ts, tp);
  }

  return 0;
}
