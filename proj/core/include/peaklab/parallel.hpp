#pragma once

#include <cstddef>
#include <functional>

namespace peaklab {

// Worker cap: min(hardware_concurrency, PEAKLAB_THREADS if set).  A value of
// 1 disables threading entirely.
int max_threads();

// Runs fn(i) for i in [0, count).  Work is split into contiguous chunks, one
// per worker.  Results must not depend on execution order; with exact
// arithmetic all our reductions are order-independent, so outputs stay
// bit-identical to a sequential run.
void parallel_for(size_t count, const std::function<void(size_t)>& fn);

// Splits [0, count) into chunks and hands each worker a half-open range.
void parallel_chunks(
    size_t count, const std::function<void(size_t begin, size_t end)>& fn);

}  // namespace peaklab
