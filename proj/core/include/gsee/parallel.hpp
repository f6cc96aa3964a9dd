#pragma once

#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

namespace gsee {

// Fixed block size for sample generation and reduction.  Work is always
// split into blocks of this size and block b always uses the random stream
// derived from (seed, b), so the worker count affects wall time only, never
// results.
inline constexpr std::int64_t sample_block_size = 8192;

inline std::int64_t num_blocks(std::int64_t n) {
    return (n + sample_block_size - 1) / sample_block_size;
}

// Runs fn(block_index) for every block in [0, blocks).  Workers claim block
// indices from a shared counter; fn must write only to state owned by its
// block so that execution order cannot matter.
template <typename Fn>
void run_blocks(std::int64_t blocks, int workers, Fn&& fn) {
    if (workers <= 1 || blocks <= 1) {
        for (std::int64_t b = 0; b < blocks; ++b) fn(b);
        return;
    }
    std::atomic<std::int64_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::int64_t b = next.fetch_add(1, std::memory_order_relaxed);
            if (b >= blocks) return;
            fn(b);
        }
    };
    int n = static_cast<int>(std::min<std::int64_t>(workers, blocks));
    std::vector<std::thread> pool;
    pool.reserve(n);
    for (int i = 0; i < n; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
}

}  // namespace gsee
