// Chunked data parallelism over independent index ranges. Every caller writes
// disjoint outputs, so results do not depend on the thread count.

#ifndef HQG_PARALLEL_HPP
#define HQG_PARALLEL_HPP

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace hqg {

/// HQG_THREADS when set to a positive integer, otherwise the hardware count.
unsigned thread_limit();

/// Calls fn(begin, end) on contiguous chunks covering [0, n).
template <class Fn>
void parallel_for(std::size_t n, std::size_t grain, Fn&& fn) {
    const std::size_t threads = std::min<std::size_t>(thread_limit(), grain ? (n + grain - 1) / grain : 1);
    if (threads <= 1) {
        fn(std::size_t{0}, n);
        return;
    }
    std::vector<std::jthread> pool;
    const std::size_t chunk = (n + threads - 1) / threads;
    for (std::size_t t = 0; t < threads; ++t) {
        const std::size_t b = t * chunk, e = std::min(n, b + chunk);
        if (b < e) pool.emplace_back([&fn, b, e] { fn(b, e); });
    }
}

}  // namespace hqg

#endif
