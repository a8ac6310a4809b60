#pragma once

#include <cstddef>
#include <functional>

namespace shadowlab::verify {

// Worker count: SHADOWLAB_THREADS when set to a positive integer, otherwise
// the hardware concurrency (at least 1).
unsigned worker_count();

// Base sampling seed: SHADOWLAB_SEED when set, otherwise `fallback`.
unsigned long long sampling_seed(unsigned long long fallback);

// Runs body(i) for i in [0, count) on up to worker_count() threads. Each
// index runs exactly once; callers write results into per-index slots and
// reduce afterwards, so the outcome does not depend on scheduling.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace shadowlab::verify
