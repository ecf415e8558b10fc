#pragma once

#include <cstddef>
#include <functional>

namespace hexakit {

// Worker count: HEXAKIT_THREADS when set (clamped to [1, hardware]), else
// the hardware concurrency.
unsigned thread_budget();

// Runs fn(i) for i in [0, n).  Work is striped statically over the budget,
// so writes into per-index slots are race free and results do not depend on
// scheduling.  The first exception thrown by fn is rethrown after all
// workers join.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

} // namespace hexakit
