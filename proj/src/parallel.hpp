#ifndef RMAC_PARALLEL_HPP
#define RMAC_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace rmac::detail {

inline unsigned resolve_workers(unsigned requested)
{
    if (requested != 0)
        return requested;
    return std::max(1u, std::thread::hardware_concurrency());
}

/// Runs body(task, worker) for every task in [0, count). Tasks are handed out
/// dynamically, so callers must make their reductions order-independent or
/// index results by task. The first exception thrown by a task is rethrown.
template <typename Body>
void parallel_for(std::size_t count, unsigned workers, Body&& body)
{
    const unsigned threads =
        static_cast<unsigned>(std::min<std::size_t>(resolve_workers(workers), std::max<std::size_t>(count, 1)));
    if (threads <= 1) {
        for (std::size_t t = 0; t < count; ++t)
            body(t, 0u);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned w = 0; w < threads; ++w) {
            pool.emplace_back([&, w] {
                for (;;) {
                    const std::size_t t = next.fetch_add(1);
                    if (t >= count)
                        return;
                    try {
                        body(t, w);
                    } catch (...) {
                        std::lock_guard lock(failure_mutex);
                        if (!failure)
                            failure = std::current_exception();
                        next.store(count);
                        return;
                    }
                }
            });
        }
    }
    if (failure)
        std::rethrow_exception(failure);
}

} // namespace rmac::detail

#endif
