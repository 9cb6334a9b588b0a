#pragma once

#include <cstddef>
#include <functional>

namespace levysmile {

/// Worker count: LEVYSMILE_THREADS when set to a positive integer,
/// otherwise the hardware concurrency (at least 1).
[[nodiscard]] std::size_t thread_count();

/// Calls body(i) for i in [0, n) on up to thread_count() threads. Each index
/// runs exactly once; the first exception thrown by a body is rethrown after
/// all workers finish.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace levysmile
