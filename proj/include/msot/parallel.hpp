#pragma once

#include <cstddef>
#include <functional>

namespace msot::parallel {

// Number of worker threads used by data-parallel reductions.
// Defaults to the hardware concurrency; 1 disables threading entirely.
int threads();
void set_threads(int n);

// Runs fn(begin, end) over a static partition of [0, n) into one
// contiguous chunk per thread. Results must not depend on chunking for
// the library's determinism contract to hold: every output index is
// written by exactly one chunk.
void for_ranges(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn);

} // namespace msot::parallel
