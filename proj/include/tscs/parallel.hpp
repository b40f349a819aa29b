#pragma once

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tscs {

/// Worker count for a parallel region: a positive request wins, otherwise
/// the OpenMP default. Serial builds always report 1.
inline int resolve_threads(int requested) {
#ifdef _OPENMP
    return requested > 0 ? requested : omp_get_max_threads();
#else
    (void)requested;
    return 1;
#endif
}

}  // namespace tscs
