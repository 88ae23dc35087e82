#pragma once

#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace unibern {

// Static block split of [0, count) over at most `jobs` threads. The first
// exception thrown by any worker is rethrown on the caller's thread.
inline void parallel_for(std::size_t count, unsigned jobs,
                         const std::function<void(std::size_t)>& fn) {
    if (jobs <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) {
            fn(i);
        }
        return;
    }
    const unsigned workers = static_cast<unsigned>(
        std::min<std::size_t>(jobs, count));
    std::vector<std::thread> threads;
    std::exception_ptr first_error;
    std::mutex error_mutex;
    for (unsigned w = 0; w < workers; ++w) {
        threads.emplace_back([&, w] {
            const std::size_t lo = count * w / workers;
            const std::size_t hi = count * (w + 1) / workers;
            try {
                for (std::size_t i = lo; i < hi; ++i) {
                    fn(i);
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) {
                    first_error = std::current_exception();
                }
            }
        });
    }
    for (auto& t : threads) {
        t.join();
    }
    if (first_error) {
        std::rethrow_exception(first_error);
    }
}

}  // namespace unibern
