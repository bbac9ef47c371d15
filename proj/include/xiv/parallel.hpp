// Data-parallel loop helper. Every kernel in this project is a pure map over
// independent indices; the parallel path must produce bit-identical results
// to the serial one, so each index writes only its own slot and no reductions
// happen inside the loop.
#ifndef XIV_PARALLEL_HPP
#define XIV_PARALLEL_HPP

#ifdef _OPENMP
#include <omp.h>
#endif

namespace xiv {

enum class ExecMode { serial, parallel };

template <typename F>
void parallel_for(ExecMode mode, int n, F&& body) {
#ifdef _OPENMP
    if (mode == ExecMode::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < n; ++i)
            body(i);
        return;
    }
#else
    (void)mode;
#endif
    for (int i = 0; i < n; ++i)
        body(i);
}

inline int hardware_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

inline void set_threads(int n) {
#ifdef _OPENMP
    if (n > 0)
        omp_set_num_threads(n);
#else
    (void)n;
#endif
}

} // namespace xiv

#endif
