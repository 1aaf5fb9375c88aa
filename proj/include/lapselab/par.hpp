#pragma once
// Thin deterministic parallelism layer.
//
// Kernels are written once and run identically at any worker count: loop
// bodies only touch their own index's output slot, and reductions accumulate
// fixed-size chunks that are combined in index order.  threads == 1 is the
// serial reference path used by the equality tests and the benchmark.

#include <cstddef>
#include <numeric>
#include <vector>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace lapselab::par {

// Configured worker count (>= 1). Defaults to the hardware/runtime value.
int thread_count();
void set_thread_count(int n);

template <class Body>
void parallel_for(std::size_t n, Body&& body) {
#if defined(_OPENMP)
  const int threads = thread_count();
  if (threads > 1 && n > 1) {
#pragma omp parallel for schedule(static) num_threads(threads)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
      body(static_cast<std::size_t>(i));
    }
    return;
  }
#endif
  for (std::size_t i = 0; i < n; ++i) body(i);
}

// Deterministic sum of term(i) for i in [0, n): fixed chunks are summed
// independently (possibly in parallel) and then combined serially in order,
// so the floating-point result never depends on the worker count.
template <class Term>
double chunked_sum(std::size_t n, Term&& term) {
  constexpr std::size_t kChunk = 4096;
  const std::size_t chunks = (n + kChunk - 1) / kChunk;
  if (chunks <= 1) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += term(i);
    return s;
  }
  std::vector<double> partial(chunks, 0.0);
  parallel_for(chunks, [&](std::size_t c) {
    const std::size_t lo = c * kChunk;
    const std::size_t hi = lo + kChunk < n ? lo + kChunk : n;
    double s = 0.0;
    for (std::size_t i = lo; i < hi; ++i) s += term(i);
    partial[c] = s;
  });
  return std::accumulate(partial.begin(), partial.end(), 0.0);
}

}  // namespace lapselab::par
