#pragma once

#include <cstddef>
#include <functional>

namespace frameforge {

// Worker count used for grid sweeps: the FRAMEFORGE_THREADS environment
// variable when set (clamped to [1, 256]), otherwise the hardware
// concurrency. Read on every call so tests can toggle it.
int worker_count();

// Runs fn(i) for every i in [0, n), partitioned into contiguous chunks
// across workers. Results must be written into preallocated, per-index
// slots; reductions happen afterwards in index order, so the outcome is
// identical for any worker count. Nested calls run serially. The first
// exception (from the lowest chunk) is rethrown.
void parallel_for_index(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace frameforge
