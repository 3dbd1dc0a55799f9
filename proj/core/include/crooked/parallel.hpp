#pragma once

#include <cstddef>
#include <functional>

namespace crooked {

/// Worker count: CROOKED_THREADS if set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
unsigned worker_count();

/// Calls body(i) for i in [0, n) from up to worker_count() threads. Indices
/// are handed out in chunks; the first exception thrown is rethrown after all
/// workers stop.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body,
                  std::size_t chunk = 16);

}  // namespace crooked
