#pragma once

#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace fixdiv {

// Runs fn(i) for i in [begin, end) across `workers` threads.  Callers write
// results into preallocated per-index slots, so the merged output does not
// depend on scheduling.
inline void parallel_for(std::uint64_t begin, std::uint64_t end, unsigned workers,
                         const std::function<void(std::uint64_t)>& fn) {
    if (end <= begin) return;
    if (workers <= 1 || end - begin == 1) {
        for (std::uint64_t i = begin; i < end; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::uint64_t span = end - begin;
    if (workers > span) workers = static_cast<unsigned>(span);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([=, &fn] {
            for (std::uint64_t i = begin + w; i < end; i += workers) fn(i);
        });
    }
    for (std::thread& t : pool) t.join();
}

}  // namespace fixdiv
