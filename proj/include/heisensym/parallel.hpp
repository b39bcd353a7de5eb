#pragma once

#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace heisensym {

/// Worker count: HEISENSYM_THREADS if set and positive, else hardware concurrency.
std::size_t worker_count();

/// Runs task(i) for every i in [0, count) on up to worker_count() threads.
/// The first exception thrown by any task is rethrown after all workers join.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& task);

}  // namespace heisensym
