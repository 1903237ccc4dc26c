// Serial vs OpenMP fraction-free determinant on Hankel matrices.
#include <omp.h>

#include <CLI11.hpp>
#include <cstdio>
#include <string>

#include "hankel/hankel.hpp"

using namespace hankel;

int main(int argc, char** argv) {
  CLI::App app{"determinant kernel benchmark"};
  std::string family = "3,1";
  int n_min = 8, n_max = 20, step = 4, repeat = 3, threads = 0;
  app.add_option("--family", family);
  app.add_option("--n-min", n_min);
  app.add_option("--n-max", n_max);
  app.add_option("--step", step)->check(CLI::PositiveNumber);
  app.add_option("--repeat", repeat)->check(CLI::PositiveNumber);
  app.add_option("--threads", threads, "OpenMP threads (0 = default)");
  CLI11_PARSE(app, argc, argv);
  if (threads > 0) omp_set_num_threads(threads);

  const FamilyId f = FamilyId::parse(family);
  std::printf("family %s, %d OpenMP threads, best of %d\n", f.name().c_str(), omp_get_max_threads(), repeat);
  std::printf("%4s %12s %12s %8s %6s\n", "n", "serial s", "openmp s", "speedup", "equal");
  bool all_equal = true;
  for (int n = n_min; n <= n_max; n += step) {
    const PolyMatrix m = hankel_matrix(f, n);
    double best_serial = 1e300, best_par = 1e300;
    Poly a, b;
    for (int r = 0; r < repeat; ++r) {
      double t0 = omp_get_wtime();
      a = det_fraction_free_serial(m);
      double t1 = omp_get_wtime();
      b = det_fraction_free(m);
      double t2 = omp_get_wtime();
      best_serial = std::min(best_serial, t1 - t0);
      best_par = std::min(best_par, t2 - t1);
    }
    bool eq = a == b;
    all_equal = all_equal && eq;
    std::printf("%4d %12.4f %12.4f %8.2f %6s\n", n, best_serial, best_par, best_serial / best_par, eq ? "yes" : "NO");
  }
  return all_equal ? 0 : 1;
}
