#pragma once

#include <cstddef>
#include <functional>

namespace gwt {

/// Worker count: GWT_THREADS when set (>=1), otherwise hardware concurrency.
std::size_t worker_count();

/// Runs fn(begin, end) over contiguous chunks of [0, n) across `workers`
/// threads (0 = worker_count()). Callers write disjoint output slots, so the
/// result is independent of scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn,
                  std::size_t workers = 0);

}  // namespace gwt
