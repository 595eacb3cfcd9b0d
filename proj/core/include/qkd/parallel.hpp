#pragma once

#include <cstddef>
#include <functional>

namespace qkd {

/// Worker count: hardware concurrency, capped by the QKDLAB_THREADS
/// environment variable when set. Always at least 1.
std::size_t worker_count();

/// Statically partitioned parallel loop over [0, n). Each index is visited
/// exactly once; f must write only to its own slot so results are identical
/// to sequential evaluation.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& f);

}  // namespace qkd
