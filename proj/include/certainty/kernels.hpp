#pragma once

// Data-parallel kernels behind the matrix algebra and the distance-based
// classifiers. Every kernel has a serial twin in `kernels::serial` that is
// kept as the reference for tests and benchmarks.
//
// Each output cell is accumulated by a single thread in ascending input
// order, so the OpenMP and serial versions agree bit for bit regardless
// of thread count.

#include <algorithm>
#include <cstddef>

#include "certainty/error.hpp"
#include "certainty/matrix.hpp"

namespace certainty::kernels {

// Below this many multiply-adds the parallel region costs more than it saves.
inline constexpr std::size_t kParallelThreshold = 1u << 16;

namespace serial {

// out = lhsᵀ · rhs, lhs is n×a, rhs is n×b, out is a×b.
template <typename R, typename A, typename B>
Matrix<R> transpose_product(const Matrix<A>& lhs, const Matrix<B>& rhs) {
  if (lhs.rows() != rhs.rows())
    throw DimensionError("transpose_product: row counts differ");
  Matrix<R> out(lhs.cols(), rhs.cols());
  for (std::size_t i = 0; i < lhs.rows(); ++i)
    for (std::size_t a = 0; a < lhs.cols(); ++a) {
      const R s = static_cast<R>(lhs(i, a));
      if (s == R{}) continue;
      for (std::size_t b = 0; b < rhs.cols(); ++b) out(a, b) += s * static_cast<R>(rhs(i, b));
    }
  return out;
}

// out(q, r) = ||queries[q] - refs[r]||²
inline Matrix<double> squared_distances(const Matrix<double>& queries,
                                        const Matrix<double>& refs) {
  if (queries.cols() != refs.cols())
    throw DimensionError("squared_distances: feature counts differ");
  Matrix<double> out(queries.rows(), refs.rows());
  for (std::size_t q = 0; q < queries.rows(); ++q)
    for (std::size_t r = 0; r < refs.rows(); ++r) {
      double acc = 0.0;
      for (std::size_t f = 0; f < queries.cols(); ++f) {
        const double d = queries(q, f) - refs(r, f);
        acc += d * d;
      }
      out(q, r) = acc;
    }
  return out;
}

}  // namespace serial

template <typename R, typename A, typename B>
Matrix<R> transpose_product(const Matrix<A>& lhs, const Matrix<B>& rhs) {
  if (lhs.rows() != rhs.rows())
    throw DimensionError("transpose_product: row counts differ");
  const std::size_t n = lhs.rows(), ka = lhs.cols(), kb = rhs.cols();
  Matrix<R> out(ka, kb);
  const bool parallel = n * ka * kb >= kParallelThreshold;
  // Each thread owns whole output rows and walks the input in cache-sized
  // row blocks, so every cell still sums in ascending input order. Static
  // schedules over the same range map rows to the same thread each block.
  constexpr std::size_t kBlock = 512;
#pragma omp parallel if (parallel)
  for (std::size_t lo = 0; lo < n; lo += kBlock) {
    const std::size_t hi = std::min(n, lo + kBlock);
#pragma omp for schedule(static) nowait
    for (std::ptrdiff_t sa = 0; sa < static_cast<std::ptrdiff_t>(ka); ++sa) {
      const auto a = static_cast<std::size_t>(sa);
      auto dst = out.row(a);
      for (std::size_t i = lo; i < hi; ++i) {
        const R s = static_cast<R>(lhs(i, a));
        if (s == R{}) continue;
        auto src = rhs.row(i);
        for (std::size_t b = 0; b < kb; ++b) dst[b] += s * static_cast<R>(src[b]);
      }
    }
  }
  return out;
}

inline Matrix<double> squared_distances(const Matrix<double>& queries,
                                        const Matrix<double>& refs) {
  if (queries.cols() != refs.cols())
    throw DimensionError("squared_distances: feature counts differ");
  const std::size_t nq = queries.rows(), nr = refs.rows(), m = queries.cols();
  Matrix<double> out(nq, nr);
  const bool parallel = nq * nr * (m ? m : 1) >= kParallelThreshold;
#pragma omp parallel for schedule(static) if (parallel)
  for (std::ptrdiff_t sq = 0; sq < static_cast<std::ptrdiff_t>(nq); ++sq) {
    const auto q = static_cast<std::size_t>(sq);
    auto x = queries.row(q);
    auto dst = out.row(q);
    for (std::size_t r = 0; r < nr; ++r) {
      auto y = refs.row(r);
      double acc = 0.0;
      for (std::size_t f = 0; f < m; ++f) {
        const double d = x[f] - y[f];
        acc += d * d;
      }
      dst[r] = acc;
    }
  }
  return out;
}

}  // namespace certainty::kernels
