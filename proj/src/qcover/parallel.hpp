#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace qcover {

// Default worker count: the QCOVER_JOBS environment variable if set and
// positive, otherwise the hardware concurrency (at least 1).
inline int default_jobs() {
    if (const char* env = std::getenv("QCOVER_JOBS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? int(hw) : 1;
}

// Runs fn(0), ..., fn(count-1) on up to `jobs` threads.  Tasks pull indices
// from a shared counter; the caller is responsible for writing results into
// per-index slots so that the outcome does not depend on scheduling.  Any
// exception is rethrown on the calling thread after all workers finish.
inline void parallel_for(long count, int jobs, const std::function<void(long)>& fn) {
    if (count <= 0) return;
    if (jobs <= 1 || count == 1) {
        for (long i = 0; i < count; ++i) fn(i);
        return;
    }
    int workers = int(std::min<long>(jobs, count));
    std::atomic<long> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int t = 0; t < workers; ++t) {
        pool.emplace_back([&]() {
            for (;;) {
                long i = next.fetch_add(1);
                if (i >= count) return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

} // namespace qcover
