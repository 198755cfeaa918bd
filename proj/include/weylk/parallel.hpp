#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace weylk {

inline unsigned default_workers() {
    unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : n;
}

/// Splits [0, n) into contiguous chunks, one per worker, and runs
/// fn(worker_index, begin, end) in parallel.  Callers keep per-worker
/// result buckets and merge them in worker order, so the combined output
/// does not depend on scheduling.
template <class Fn> void parallel_chunks(std::size_t n, unsigned workers, Fn fn) {
    if (workers <= 1 || n <= 1) {
        fn(0u, std::size_t{0}, n);
        return;
    }
    if (static_cast<std::size_t>(workers) > n)
        workers = static_cast<unsigned>(n);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::size_t base = n / workers, extra = n % workers;
    std::size_t begin = 0;
    for (unsigned w = 0; w < workers; ++w) {
        std::size_t len = base + (w < extra ? 1 : 0);
        std::size_t end = begin + len;
        pool.emplace_back([fn, w, begin, end] { fn(w, begin, end); });
        begin = end;
    }
    for (auto &t : pool)
        t.join();
}

} // namespace weylk
