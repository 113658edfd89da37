#pragma once

#ifdef _OPENMP
#include <omp.h>
#endif

namespace degcorr {

/// Thread count for a parallel region: `jobs` when positive, otherwise the
/// OpenMP default.
inline int resolve_jobs(int jobs) {
#ifdef _OPENMP
    return jobs > 0 ? jobs : omp_get_max_threads();
#else
    (void)jobs;
    return 1;
#endif
}

}  // namespace degcorr
