#pragma once

#include <cstddef>
#include <functional>

namespace arbor {

/// Runs fn(worker, begin, end) over `jobs` contiguous chunks of [0, count).
/// Exceptions thrown by a worker are rethrown on the calling thread.
void parallel_chunks(
    std::size_t count, unsigned jobs,
    const std::function<void(unsigned, std::size_t, std::size_t)>& fn);

/// Runs fn(i) for every i in [0, count), dealing indices to `jobs` threads.
void parallel_for(std::size_t count, unsigned jobs,
                  const std::function<void(std::size_t)>& fn);

}  // namespace arbor
