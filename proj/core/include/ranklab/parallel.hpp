#pragma once

#include <functional>

namespace ranklab {

// Worker count for parallel_for; 0 means hardware concurrency.
void set_thread_count(int n);
int thread_count();

// Runs fn(i) for 0 <= i < n. Results must be written to disjoint slots.
// The first exception thrown by any worker is rethrown.
void parallel_for(int n, const std::function<void(int)>& fn);

}  // namespace ranklab
