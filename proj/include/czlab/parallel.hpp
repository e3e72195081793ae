#pragma once

#include <cstddef>
#include <functional>

namespace czlab {

/// Number of worker threads: hardware concurrency, capped by CZLAB_THREADS.
unsigned worker_count();

/// Runs body(i) for i in [0, n) on the worker pool. Each index is visited
/// exactly once; body must only write to state owned by index i.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace czlab
