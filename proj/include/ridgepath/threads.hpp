#pragma once

#include <cstddef>
#include <functional>

namespace ridgepath {

// Worker count for parallel sections. RIDGEPATH_THREADS=0 or unset means
// hardware concurrency; anything else is used as given (minimum 1).
std::size_t thread_cap();

// Runs fn(i) for i in [0, count) on up to thread_cap() workers. Indices are
// partitioned into contiguous blocks, one block per worker, so each i is
// visited exactly once. The first exception thrown by any worker is
// rethrown on the calling thread after all workers join.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace ridgepath
