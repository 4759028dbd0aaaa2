#pragma once

#include <cstddef>
#include <functional>

namespace nskernel {

// Worker count used by parallel_for when the caller passes 0.
int default_threads();
void set_default_threads(int k);

// Runs body(i) for i in [0, count). Each index is written by exactly one
// worker, so callers that store results by index get deterministic output
// independent of the thread count.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body,
                  int threads = 0);

}  // namespace nskernel
