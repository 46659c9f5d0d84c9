#pragma once

#include <cstddef>
#include <functional>

namespace zollech {

// Worker cap: ZOLL_ECH_THREADS when set (>= 1), otherwise the hardware
// parallelism.
std::size_t worker_count();

// Runs f(i) for i in [0, n) across workers. Results must be written to
// per-index slots so the outcome is identical to the sequential order.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& f);

}  // namespace zollech
