#pragma once

#include <cstddef>
#include <functional>

namespace focktiles {

// FOCKTILES_THREADS if set and positive, otherwise the hardware concurrency (at least 1)
unsigned thread_count();

// runs body(i) for i in [0, n) on up to thread_count() threads; rethrows the first exception
void parallel_for(size_t n, const std::function<void(size_t)>& body);

}  // namespace focktiles
