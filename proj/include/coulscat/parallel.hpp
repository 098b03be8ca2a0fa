#pragma once

#include <functional>

namespace coulscat {

/// Runs body(i) for i in [0, n) on a small thread pool.  Callers store
/// results by index, so output order is independent of scheduling.  The
/// first exception thrown by any body is rethrown after all workers join.
void parallel_for_index(int n, const std::function<void(int)>& body);

}  // namespace coulscat
