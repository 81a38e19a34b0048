#pragma once
//! \file threading.hpp
//! \brief Minimal deterministic parallel-for over independent index ranges.

#include <functional>
#include <thread>
#include <vector>

namespace semibolt {

//! Runs body(k) for k in [0, n). With nthreads > 1 the range is split into
//! contiguous chunks, one thread per chunk. Bodies must be independent;
//! reductions stay serial so results are bitwise identical for any thread
//! count.
inline void parallel_for(int n, int nthreads, const std::function<void(int)>& body) {
    if (nthreads <= 1 || n <= 1) {
        for (int k = 0; k < n; ++k) body(k);
        return;
    }
    int nt = std::min(nthreads, n);
    std::vector<std::thread> pool;
    pool.reserve(nt);
    for (int t = 0; t < nt; ++t) {
        int lo = static_cast<int>(static_cast<long>(n) * t / nt);
        int hi = static_cast<int>(static_cast<long>(n) * (t + 1) / nt);
        pool.emplace_back([lo, hi, &body] {
            for (int k = lo; k < hi; ++k) body(k);
        });
    }
    for (auto& th : pool) th.join();
}

} // namespace semibolt
