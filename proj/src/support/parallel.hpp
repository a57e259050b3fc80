#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace latzeta {

// Parallel-map capability handed down from the front end.  Work is split
// into indexed chunks; shard results are merged by the caller in chunk
// order, so results do not depend on the worker count.
class Parallel {
public:
    explicit Parallel(int workers = 0) {
        if (workers <= 0) {
            unsigned hc = std::thread::hardware_concurrency();
            workers = hc ? static_cast<int>(hc) : 1;
        }
        workers_ = workers;
    }

    int workers() const { return workers_; }

    // Runs fn(chunk_index) for every index in [0, count).  fn must only
    // touch per-chunk state.
    void for_each_chunk(size_t count, const std::function<void(size_t)>& fn) const {
        if (count == 0) return;
        int nthreads = workers_;
        if (nthreads <= 1 || count == 1) {
            for (size_t i = 0; i < count; ++i) fn(i);
            return;
        }
        if (static_cast<size_t>(nthreads) > count) nthreads = static_cast<int>(count);
        std::atomic<size_t> next{0};
        std::atomic<bool> failed{false};
        std::exception_ptr error;
        std::mutex error_mutex;
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(nthreads));
        for (int t = 0; t < nthreads; ++t) {
            pool.emplace_back([&]() {
                for (;;) {
                    size_t i = next.fetch_add(1);
                    if (i >= count || failed.load()) return;
                    try {
                        fn(i);
                    } catch (...) {
                        std::lock_guard<std::mutex> lock(error_mutex);
                        if (!error) error = std::current_exception();
                        failed.store(true);
                        return;
                    }
                }
            });
        }
        for (auto& th : pool) th.join();
        if (error) std::rethrow_exception(error);
    }

private:
    int workers_ = 1;
};

}  // namespace latzeta
