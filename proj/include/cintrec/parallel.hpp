#pragma once

#include <algorithm>
#include <thread>
#include <vector>

namespace cintrec {

/// Runs f(i) for i in [0, n) on up to `threads` workers. The index space
/// is split into contiguous chunks so that results written per index are
/// identical for every thread count.
template <class F>
void parallel_for(int n, int threads, F&& f) {
    threads = std::max(1, threads);
    if (threads == 1 || n < 2) {
        for (int i = 0; i < n; ++i) f(i);
        return;
    }
    threads = std::min(threads, n);
    std::vector<std::thread> pool;
    pool.reserve(threads);
    const int chunk = (n + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
        const int lo = t * chunk;
        const int hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &f]() {
            for (int i = lo; i < hi; ++i) f(i);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace cintrec
