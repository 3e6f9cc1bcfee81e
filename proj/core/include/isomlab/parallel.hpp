#pragma once

#include <cstddef>
#include <functional>

namespace isomlab {

/// Worker count taken from ISOMLAB_THREADS (default 1, minimum 1).
int default_thread_count();

/// Runs task(i) for i in [0, count) on up to `threads` workers.
///
/// Tasks must write only to their own output slot; callers merge results by
/// index afterwards, which keeps every reduction independent of scheduling.
/// The first exception thrown by any task is rethrown after all workers join.
void parallel_for(std::size_t count, int threads,
                  const std::function<void(std::size_t)>& task);

}  // namespace isomlab
