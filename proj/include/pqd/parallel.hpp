#pragma once

#include <cstddef>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace pqd {

/// Runs fn over [0,count) split into contiguous chunks, one per worker.
/// Falls back to a plain call on single-core hosts or tiny ranges. The
/// first exception thrown by any chunk is rethrown on the calling thread.
inline void parallel_for_chunks(
    std::size_t count,
    const std::function<void(std::size_t begin, std::size_t end)>& fn) {
    std::size_t workers = std::thread::hardware_concurrency();
    if (workers < 2 || count < 2) {
        if (count > 0) fn(0, count);
        return;
    }
    if (workers > count) workers = count;
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    const std::size_t chunk = (count + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t begin = w * chunk;
        const std::size_t end = begin + chunk < count ? begin + chunk : count;
        if (begin >= end) break;
        pool.emplace_back([&, w, begin, end] {
            try {
                fn(begin, end);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

} // namespace pqd
