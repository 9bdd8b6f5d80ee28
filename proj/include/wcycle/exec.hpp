// Copyright (c) 2026 The wcycle authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <functional>

namespace wcycle {

// Execution policy for the bulk operations (enumeration, per-row tables,
// per-degree ranks).  `parallel` uses OpenMP worker threads; `serial` runs the
// reference single-threaded code path.  Results are identical by construction;
// the benchmark tool compares the two.
enum class Exec { serial, parallel };

// Runs fn(i) for i in [0, count).  Under Exec::parallel, iterations are
// distributed over OpenMP threads; fn must be safe to run concurrently and
// must only write to per-index slots.
void parallel_for(std::size_t count, Exec exec, const std::function<void(std::size_t)>& fn);

// Number of worker threads the parallel policy would use.
int worker_count();

} // namespace wcycle
