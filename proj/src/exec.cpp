// Copyright (c) 2026 The wcycle authors
// SPDX-License-Identifier: Apache-2.0
#include "wcycle/exec.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace wcycle {

void parallel_for(std::size_t count, Exec exec, const std::function<void(std::size_t)>& fn) {
#ifdef _OPENMP
    if (exec == Exec::parallel) {
        #pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < static_cast<long long>(count); ++i)
            fn(static_cast<std::size_t>(i));
        return;
    }
#else
    (void)exec;
#endif
    for (std::size_t i = 0; i < count; ++i) fn(i);
}

int worker_count() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

} // namespace wcycle
