// parallel.hpp - static-partition parallel loops and integer reductions
#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <thread>
#include <vector>

namespace szeged {

/// Calls body(i) for every i in [0, count), splitting the range into
/// contiguous chunks over `threads` workers. body must only write to
/// per-index state.
template <typename Body>
void parallel_for(std::size_t count, unsigned threads, Body&& body) {
    const std::size_t workers = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(count, 1));
    if (workers == 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    const std::size_t chunk = (count + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t lo = w * chunk;
        const std::size_t hi = std::min(count, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &body] {
            for (std::size_t i = lo; i < hi; ++i) body(i);
        });
    }
}

/// Sum of term(i) over [0, count). Integer addition is associative, so the
/// result does not depend on the thread count.
template <typename T, typename Term>
T parallel_sum(std::size_t count, unsigned threads, Term&& term) {
    std::vector<T> partial(count);
    parallel_for(count, threads, [&](std::size_t i) { partial[i] = term(i); });
    return std::accumulate(partial.begin(), partial.end(), T{});
}

}  // namespace szeged
