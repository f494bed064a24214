#pragma once

#include <functional>
#include <thread>
#include <vector>

namespace osps3 {

// chunked index-parallel loop; results must be written to per-index slots so
// output stays deterministic regardless of scheduling
inline void parallel_for(size_t n, const std::function<void(size_t)>& body) {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw <= 1 || n < 8) {
        for (size_t i = 0; i < n; ++i) body(i);
        return;
    }
    size_t nthreads = std::min<size_t>(hw, n);
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (size_t t = 0; t < nthreads; ++t)
        pool.emplace_back([&, t] {
            for (size_t i = t; i < n; i += nthreads) body(i);
        });
    for (auto& th : pool) th.join();
}

} // namespace osps3
