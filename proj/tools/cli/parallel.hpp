#pragma once

#include <cstddef>
#include <functional>

namespace cavity::cli {

// Worker count: CAVITY_RPM_THREADS when set to a positive integer,
// otherwise the hardware concurrency (at least 1).
unsigned worker_count();

// Calls body(begin, end) on disjoint contiguous chunks covering [0, n).
// Chunks run on up to worker_count() threads; results must be written to
// per-index slots so the output does not depend on scheduling.
void parallel_for(std::size_t n,
                  const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace cavity::cli
