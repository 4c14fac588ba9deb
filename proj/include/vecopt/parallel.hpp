#pragma once

#include <atomic>
#include <functional>
#include <thread>
#include <vector>

namespace vecopt {

inline int resolve_threads(int requested) {
    if (requested > 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? int(hw) : 1;
}

// Runs fn(i) for i in [0, n). Work items must write disjoint data; callers
// that accumulate keep one buffer per item and reduce in index order so the
// result is identical for any thread count.
inline void parallel_for(int n, int threads, const std::function<void(int)>& fn) {
    threads = std::min(resolve_threads(threads), n);
    if (threads <= 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    auto worker = [&] {
        for (;;) {
            int i = next.fetch_add(1);
            if (i >= n) return;
            fn(i);
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(threads - 1);
    for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
}

}  // namespace vecopt
