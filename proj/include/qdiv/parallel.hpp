#pragma once

// OpenMP fan-out for independent jobs. Every parallel kernel in the library
// also runs with ExecPolicy::Serial, which is the reference the tests compare to.

#include <exception>
#include <mutex>

namespace qdiv {

enum class ExecPolicy { Serial, Parallel };

/// Thread count for parallel regions: QDIV_THREADS if set to a positive
/// integer, otherwise the OpenMP default.
int thread_cap();

/// Runs body(i) for 0 <= i < n. Jobs must write only to their own slots.
/// The first exception thrown by any job is rethrown after the loop.
template <class Body>
void parallel_for(int n, ExecPolicy policy, Body&& body) {
    if (policy == ExecPolicy::Serial || n < 2) {
        for (int i = 0; i < n; ++i) body(i);
        return;
    }
    std::exception_ptr err;
    std::mutex m;
#pragma omp parallel for schedule(dynamic, 1) num_threads(thread_cap())
    for (int i = 0; i < n; ++i) {
        try {
            body(i);
        } catch (...) {
            std::lock_guard<std::mutex> lock(m);
            if (!err) err = std::current_exception();
        }
    }
    if (err) std::rethrow_exception(err);
}

}  // namespace qdiv
