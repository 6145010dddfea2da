#pragma once

#include <cstddef>
#include <functional>

namespace timeop {

/// Worker count: TIMEOP_THREADS if set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
std::size_t thread_count();

/// Calls body(i) for i in [0, count) on up to thread_count() threads. Each
/// index is visited once; the first exception thrown is rethrown after join.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace timeop
