#ifndef ZETA4_PARALLEL_HPP
#define ZETA4_PARALLEL_HPP

#include <cstddef>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace zeta4 {

// Every data-parallel kernel in this project takes an ExecMode and must
// produce bit-identical results in both modes: work items are independent
// and merges happen in index order after the loop.
enum class ExecMode { serial, openmp };

inline int hardware_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

template <class F>
void parallel_for(ExecMode mode, std::size_t n, F&& body) {
    if (mode == ExecMode::openmp) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < static_cast<long long>(n); ++i)
            body(static_cast<std::size_t>(i));
        return;
#endif
    }
    for (std::size_t i = 0; i < n; ++i) body(i);
}

template <class F>
void parallel_for(ExecMode mode, std::size_t n, int max_threads, F&& body) {
    if (mode == ExecMode::openmp) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(max_threads > 0 ? max_threads : omp_get_max_threads())
        for (long long i = 0; i < static_cast<long long>(n); ++i)
            body(static_cast<std::size_t>(i));
        return;
#endif
    }
    (void)max_threads;
    for (std::size_t i = 0; i < n; ++i) body(i);
}

} // namespace zeta4

#endif
