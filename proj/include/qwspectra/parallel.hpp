#pragma once

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace qwspectra {

// Worker cap: QWSPECTRA_THREADS if set (values < 1 mean 1), else hardware
// concurrency.
inline unsigned thread_budget() {
    if (const char* env = std::getenv("QWSPECTRA_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        return v < 1 ? 1u : static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1u;
}

// Runs fn(begin, end) over a partition of [0, count). Falls back to a plain
// call when one worker suffices.
template <class Fn>
void parallel_chunks(std::size_t count, Fn&& fn) {
    unsigned workers = std::min<std::size_t>(thread_budget(), count ? count : 1);
    if (workers <= 1) {
        fn(std::size_t{0}, count);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::size_t chunk = (count + workers - 1) / workers;
    for (unsigned t = 0; t < workers; ++t) {
        std::size_t lo = t * chunk;
        std::size_t hi = std::min(count, lo + chunk);
        if (lo >= hi)
            break;
        pool.emplace_back([&fn, lo, hi] { fn(lo, hi); });
    }
    for (auto& th : pool)
        th.join();
}

} // namespace qwspectra
