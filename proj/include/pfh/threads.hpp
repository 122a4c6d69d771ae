#ifndef PFH_THREADS_HPP
#define PFH_THREADS_HPP

#include <atomic>
#include <cstdlib>
#include <functional>
#include <string>
#include <thread>
#include <vector>

namespace pfh {

/// Worker count for parallel_for. PFH_LATTICE_THREADS overrides (clamped to
/// [1, 64]); otherwise hardware concurrency capped at 8, never 0.
inline int thread_budget() {
    if (const char* env = std::getenv("PFH_LATTICE_THREADS")) {
        try {
            int v = std::stoi(env);
            if (v >= 1) return v > 64 ? 64 : v;
        } catch (const std::exception&) {
            // fall through to the default
        }
    }
    unsigned hc = std::thread::hardware_concurrency();
    if (hc == 0) return 1;
    return hc > 8 ? 8 : static_cast<int>(hc);
}

/// Runs fn(0), ..., fn(n-1), possibly concurrently. fn must not throw; report
/// failures through captured state and inspect it afterwards. Results must be
/// written to disjoint slots so the outcome is independent of scheduling.
inline void parallel_for(size_t n, const std::function<void(size_t)>& fn) {
    size_t workers = static_cast<size_t>(thread_budget());
    if (workers > n) workers = n;
    if (workers <= 1) {
        for (size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (size_t i; (i = next.fetch_add(1)) < n;) fn(i);
        });
    }
    for (std::thread& t : pool) t.join();
}

}  // namespace pfh

#endif  // PFH_THREADS_HPP
