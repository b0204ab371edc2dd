#pragma once

#include <cstddef>
#include <functional>

namespace quiverkit {

// Upper bound on worker threads used by library operations. Zero means
// "hardware concurrency".
void set_worker_limit(unsigned limit);
unsigned worker_limit();

// Runs body(i) for i in [0, count). Each index is visited exactly once; callers
// write results into per-index slots so output never depends on the schedule.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace quiverkit
