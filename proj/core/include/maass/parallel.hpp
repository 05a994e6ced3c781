#pragma once

#include <cstddef>
#include <functional>

namespace maass {

// Worker count: MAASS_RHL_THREADS if set, otherwise the hardware concurrency.
unsigned thread_count();

// Runs body(i) for i in [0, n).  Each index is visited exactly once; calls made
// from inside a running parallel_for execute serially.
void parallel_for(size_t n, const std::function<void(size_t)>& body);

}  // namespace maass
