#pragma once

#include <cstddef>
#include <functional>

namespace bergman {

/// Worker count: hardware parallelism, capped by the BERGMAN_LAB_THREADS
/// environment variable when set.
std::size_t worker_count();

/// Runs fn(i) for i in [0, n) across workers. Results must be written to
/// per-index slots by the callee; the caller reduces them in index order,
/// so output does not depend on the number of threads.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace bergman
