#pragma once

#include <cstddef>
#include <functional>

namespace fiblcm::detail {

// Worker count: FIBLCM_THREADS if set and positive, else the hardware
// concurrency (at least 1).
std::size_t default_thread_count();

// Runs fn(0..count-1) across default_thread_count() threads.  Each index is
// handled exactly once; callers keep determinism by writing only to
// index-owned slots.  The first exception, if any, is rethrown on the
// calling thread.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace fiblcm::detail
