#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace primecover {

/// Resolve a requested thread count; 0 means all available cores.
inline unsigned resolve_threads(unsigned requested) {
    if (requested != 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

/// Run fn(block) for block in [0, blocks) on up to `threads` workers.
/// Blocks are handed out round-robin; callers keep per-block results so the
/// outcome never depends on scheduling.
template <class Fn>
void parallel_blocks(std::uint64_t blocks, unsigned threads, Fn&& fn) {
    const std::uint64_t workers = std::min<std::uint64_t>(resolve_threads(threads), blocks);
    if (workers <= 1) {
        for (std::uint64_t b = 0; b < blocks; ++b) fn(b);
        return;
    }
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::uint64_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::uint64_t b = w; b < blocks; b += workers) fn(b);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace primecover
