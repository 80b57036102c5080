#pragma once

#include <cstddef>
#include <functional>

namespace nnc {

/// Worker count: hardware concurrency, capped by the NNC_THREADS
/// environment variable when set.
std::size_t worker_count();

/// Calls `body(i)` for every i in [0, n), split into contiguous chunks
/// across worker threads. Bodies must only write state owned by index i,
/// which keeps results identical to a sequential run.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace nnc
