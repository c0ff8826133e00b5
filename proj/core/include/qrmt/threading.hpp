#pragma once

// Minimal parallel-for helper.  Thread count is capped by the QRMT_THREADS
// environment variable (default: hardware concurrency).

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace qrmt {

inline int max_threads() {
    if (const char* env = std::getenv("QRMT_THREADS")) {
        int n = std::atoi(env);
        if (n >= 1) return n;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 1;
}

// Calls f(i) for i in [0, n); work is split contiguously across threads.
inline void parallel_for(std::size_t n, const std::function<void(std::size_t)>& f) {
    int nt = max_threads();
    if (nt <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) f(i);
        return;
    }
    nt = static_cast<int>(std::min<std::size_t>(nt, n));
    std::vector<std::thread> pool;
    pool.reserve(nt);
    std::size_t chunk = (n + nt - 1) / nt;
    for (int t = 0; t < nt; ++t) {
        std::size_t lo = t * chunk, hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &f] {
            for (std::size_t i = lo; i < hi; ++i) f(i);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace qrmt
