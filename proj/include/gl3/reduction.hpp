#ifndef GL3_REDUCTION_HPP
#define GL3_REDUCTION_HPP

#include <cstddef>
#include <vector>

#include "gl3/types.hpp"

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace gl3 {

// ---------------------------------------------------------------------------
// Deterministic compensated summation.
//
// All long reductions in this library run over a fixed block partition:
// each block is summed serially in index order with Neumaier compensation,
// and the per-block partials are combined in block order. The OpenMP path
// only changes WHICH thread owns a block, never the arithmetic, so parallel
// and serial results are bit-identical and independent of thread count.
// ---------------------------------------------------------------------------

inline constexpr std::size_t kReduceBlock = 1024;

bool parallel_enabled();
void set_parallel(bool on);
void set_thread_count(int n);  // n <= 1 disables the OpenMP path
int thread_count();

struct Neumaier {
  double s = 0.0;
  double c = 0.0;
  void add(double x) {
    double t = s + x;
    if (std::abs(s) >= std::abs(x))
      c += (s - t) + x;
    else
      c += (x - t) + s;
    s = t;
  }
  double result() const { return s + c; }
};

struct CNeumaier {
  Neumaier re, im;
  void add(const cdouble& z) {
    re.add(z.real());
    im.add(z.imag());
  }
  cdouble result() const { return {re.result(), im.result()}; }
};

namespace detail {

template <class F>
cdouble sum_block(std::size_t lo, std::size_t hi, const F& term) {
  CNeumaier acc;
  for (std::size_t i = lo; i < hi; ++i) acc.add(term(i));
  return acc.result();
}

template <class F>
cdouble combine_blocks(std::size_t n, const F& term, bool parallel) {
  const std::size_t nblocks = (n + kReduceBlock - 1) / kReduceBlock;
  std::vector<cdouble> partial(nblocks);
#if defined(_OPENMP)
  if (parallel && nblocks > 1) {
#pragma omp parallel for schedule(static)
    for (long long b = 0; b < static_cast<long long>(nblocks); ++b) {
      const std::size_t lo = static_cast<std::size_t>(b) * kReduceBlock;
      const std::size_t hi = std::min(n, lo + kReduceBlock);
      partial[static_cast<std::size_t>(b)] = sum_block(lo, hi, term);
    }
  } else
#endif
  {
    (void)parallel;
    for (std::size_t b = 0; b < nblocks; ++b) {
      const std::size_t lo = b * kReduceBlock;
      const std::size_t hi = std::min(n, lo + kReduceBlock);
      partial[b] = sum_block(lo, hi, term);
    }
  }
  CNeumaier acc;
  for (const cdouble& p : partial) acc.add(p);
  return acc.result();
}

}  // namespace detail

// Sum of term(i) for i in [0, n), deterministic blocked reduction.
template <class F>
cdouble block_sum(std::size_t n, const F& term) {
  return detail::combine_blocks(n, term, parallel_enabled());
}

// Serial reference path: same partition, same arithmetic, no OpenMP.
template <class F>
cdouble block_sum_serial(std::size_t n, const F& term) {
  return detail::combine_blocks(n, term, false);
}

// Plain left-to-right compensated sum; kept as an independent reference for
// tests of the blocked scheme.
template <class F>
cdouble naive_sum(std::size_t n, const F& term) {
  CNeumaier acc;
  for (std::size_t i = 0; i < n; ++i) acc.add(term(i));
  return acc.result();
}

}  // namespace gl3

#endif  // GL3_REDUCTION_HPP
