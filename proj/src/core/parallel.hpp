#pragma once

#include <cstdint>
#include <functional>

namespace rbfcnn {

/// Worker count: RBFCNN_THREADS if set, else hardware concurrency.
int thread_count();

/// Runs fn(i) for i in [0, n). Work items must be independent; anything
/// order-sensitive (gradient sums, vote tallies) is reduced by the caller
/// in index order afterwards, so results never depend on scheduling.
void parallel_for(std::int64_t n, const std::function<void(std::int64_t)>& fn);

} // namespace rbfcnn
