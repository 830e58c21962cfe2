#pragma once

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace semifield {

/// Worker cap: SEMIFIELD_LAB_THREADS when set (>= 1), else hardware concurrency.
inline int worker_count() {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw < 1) hw = 1;
    if (const char* env = std::getenv("SEMIFIELD_LAB_THREADS")) {
        int cap = std::atoi(env);
        if (cap >= 1) return std::min(hw, cap);
    }
    return hw;
}

/// Runs fn(lo, hi) over a partition of [from, to) on up to `workers` threads.
/// Chunks are contiguous and in index order, so min-reductions over the
/// per-chunk results are deterministic.
template <typename Fn>
void run_chunked(long long from, long long to, int workers, Fn&& fn) {
    long long span = to - from;
    if (span <= 0) return;
    int t = static_cast<int>(std::min<long long>(workers, span));
    if (t <= 1) {
        fn(from, to);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(t);
    long long chunk = (span + t - 1) / t;
    for (int i = 0; i < t; ++i) {
        long long lo = from + i * chunk;
        long long hi = std::min(to, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&fn, lo, hi] { fn(lo, hi); });
    }
    for (auto& th : pool) th.join();
}

}  // namespace semifield
