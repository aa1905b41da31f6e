#pragma once

#include <algorithm>
#include <functional>
#include <thread>
#include <vector>

namespace bigvol {

// Runs fn(i) for i in [0, n) on up to `degree` threads (degree <= 1 runs
// inline). Work items must be independent; results must not depend on
// scheduling order.
inline void parallel_for(std::size_t n, int degree, const std::function<void(std::size_t)>& fn) {
    if (n == 0) return;
    if (degree <= 0) degree = static_cast<int>(std::thread::hardware_concurrency());
    std::size_t workers = std::min<std::size_t>(std::max(degree, 1), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::atomic<std::size_t> next{0};
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= n) return;
                fn(i);
            }
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace bigvol
