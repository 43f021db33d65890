#pragma once

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "eqschub/errors.hpp"

namespace eqschub {

// Runs body(thread_id, index) for index = 0..count-1 over up to jobs worker
// threads (jobs <= 0 means hardware concurrency).  The first exception is
// rethrown on the calling thread after all workers stop.
template <class Body>
void parallel_for(long long count, int jobs, Body&& body) {
    if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
    if (jobs < 1) jobs = 1;
    if (jobs > count) jobs = static_cast<int>(count < 1 ? 1 : count);

    if (jobs == 1) {
        for (long long i = 0; i < count; ++i) body(0, i);
        return;
    }

    std::atomic<long long> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    std::atomic<bool> stop{false};

    auto worker = [&](int tid) {
        try {
            while (!stop.load(std::memory_order_relaxed)) {
                const long long i = next.fetch_add(1, std::memory_order_relaxed);
                if (i >= count) break;
                body(tid, i);
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!first_error) first_error = std::current_exception();
            stop.store(true, std::memory_order_relaxed);
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

} // namespace eqschub
