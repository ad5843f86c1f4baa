#pragma once

#include <cstdint>
#include <functional>

namespace angle_extremes {

// Worker count to use when the caller passes 0: ANGLE_EXTREMES_THREADS if set
// and positive, otherwise std::thread::hardware_concurrency(), floor 1.
int resolve_threads(int requested);

// Runs body(trial) for trial in [0, trials) on up to `threads` workers.
// Each invocation must derive all randomness from its own trial index so the
// result set is identical for every thread count.
void parallel_trials(long long trials, int threads, const std::function<void(long long)>& body);

}  // namespace angle_extremes
