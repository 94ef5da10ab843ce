#pragma once

#include <cstddef>
#include <functional>

namespace minkprob {

/// Worker count: hardware concurrency, capped by MINKPROB_THREADS when set.
unsigned worker_count();

/// Runs body(begin, end) over contiguous chunks of [0, n).  Chunks are fixed
/// by n and the worker count, so per-chunk reductions are deterministic.
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace minkprob
