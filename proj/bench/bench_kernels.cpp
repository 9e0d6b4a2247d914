// Times the serial and OpenMP kernels on the same inputs.
//   bench_kernels [n] [k] [repeats]

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>

#include "certainty/kernels.hpp"

using namespace certainty;

template <typename Fn>
double best_of(int repeats, Fn&& fn) {
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  }
  return best;
}

int main(int argc, char** argv) {
  const std::size_t n = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 100000;
  const std::size_t k = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 50;
  const int repeats = argc > 3 ? std::atoi(argv[3]) : 5;

  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::uniform_int_distribution<std::size_t> cls(0, k - 1);
  Matrix<double> t(n, k), q(n, k);
  for (std::size_t i = 0; i < n; ++i) {
    t(i, cls(rng)) = 1.0;
    for (std::size_t j = 0; j < k; ++j) q(i, j) = u(rng);
  }

  std::printf("threads: %d\n", omp_get_max_threads());
  Matrix<double> a, b;
  const double ts = best_of(repeats, [&] { a = kernels::serial::transpose_product<double>(t, q); });
  const double tp = best_of(repeats, [&] { b = kernels::transpose_product<double>(t, q); });
  std::printf("transpose_product n=%zu k=%zu  serial %.4fs  openmp %.4fs  speedup %.2fx  %s\n", n, k,
              ts, tp, ts / tp, a == b ? "identical" : "MISMATCH");

  const std::size_t nq = std::min<std::size_t>(n, 2000), nr = std::min<std::size_t>(n, 5000);
  Matrix<double> queries(nq, k), refs(nr, k);
  for (auto& v : queries.values()) v = u(rng);
  for (auto& v : refs.values()) v = u(rng);
  const double ds = best_of(repeats, [&] { a = kernels::serial::squared_distances(queries, refs); });
  const double dp = best_of(repeats, [&] { b = kernels::squared_distances(queries, refs); });
  std::printf("squared_distances %zux%zu m=%zu  serial %.4fs  openmp %.4fs  speedup %.2fx  %s\n", nq,
              nr, k, ds, dp, ds / dp, a == b ? "identical" : "MISMATCH");
  return a == b ? 0 : 1;
}
