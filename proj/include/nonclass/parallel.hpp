#pragma once

#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace nonclass {

/// Number of worker threads: NONCLASS_THREADS env var wins, then `requested`
/// (0 means hardware concurrency).
inline std::size_t resolve_threads(std::size_t requested) {
    if (const char* env = std::getenv("NONCLASS_THREADS")) {
        const long v = std::atol(env);
        if (v > 0) return std::size_t(v);
    }
    if (requested > 0) return requested;
    const unsigned hc = std::thread::hardware_concurrency();
    return hc > 0 ? hc : 1;
}

/// Run fn(i) for i in [0, count). Each task writes only to its own index, so
/// the assembled result is independent of scheduling.
inline void parallel_for(std::size_t count, std::size_t threads,
                         const std::function<void(std::size_t)>& fn) {
    threads = std::min(resolve_threads(threads), count);
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t)
        pool.emplace_back([&]() {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
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
    for (std::thread& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

} // namespace nonclass
