#pragma once

#include <cstddef>
#include <functional>

namespace indcluster {

// Worker count: set_jobs() if called with n >= 1, else INDCLUSTER_JOBS, else hardware concurrency.
void set_jobs(int n);
int jobs();

// Runs body(i) for i in [0, count); the first exception thrown by any worker is rethrown.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace indcluster
