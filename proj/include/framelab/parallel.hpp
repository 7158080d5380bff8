#pragma once

#include <cstddef>
#include <functional>

namespace framelab {

/// Worker-pool size: FRAMELAB_THREADS if set and nonzero, hardware
/// concurrency otherwise (FRAMELAB_THREADS=0 also means auto).
std::size_t worker_count();

/// Runs fn(i) for i in [0, n).  Work is split into fixed-size chunks so that
/// results written per-index are identical for any thread count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace framelab
