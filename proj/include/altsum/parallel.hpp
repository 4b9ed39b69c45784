#pragma once

#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace altsum {

/// Process-wide default worker count (CLI --threads / ALTSUM_THREADS set it).
inline int& default_thread_count() {
    static int n = static_cast<int>(std::thread::hardware_concurrency());
    return n;
}

/// Evaluates fn(i) for i in [0, count) into a vector. Work is split across
/// threads but results land in index order, so any sequential reduction of
/// the returned vector is deterministic regardless of the thread count.
template <typename T, typename Fn>
std::vector<T> parallel_map(std::size_t count, Fn&& fn, int threads = -1) {
    if (threads < 0) threads = default_thread_count();
    std::vector<T> out(count);
    if (threads <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
        return out;
    }
    const std::size_t nw = std::min<std::size_t>(static_cast<std::size_t>(threads), count);
    std::vector<std::thread> pool;
    pool.reserve(nw);
    std::vector<std::exception_ptr> errors(nw);
    for (std::size_t w = 0; w < nw; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < count; i += nw) out[i] = fn(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

}  // namespace altsum
