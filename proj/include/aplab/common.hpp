// common.hpp
// Shared integer helpers, error types and the worker-thread knob.
// All inputs across the library are capped at 2^50, so ordinary 64-bit
// arithmetic suffices except where noted (128-bit for intermediates).

#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace aplab {

using u8 = std::uint8_t;
using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

inline constexpr u64 kMaxInput = u64{1} << 50;

// Thrown when an operation would exceed its configured enumeration budget.
struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline u64 isqrt_u64(u64 n) {
    if (n == 0) return 0;
    u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

inline u64 gcd_u64(u64 a, u64 b) {
    while (b) { u64 t = a % b; a = b; b = t; }
    return a;
}

// gcd against a possibly negative shift; gcd(n, 0) = n.
inline u64 gcd_i(u64 n, i64 a) {
    u64 au = a < 0 ? static_cast<u64>(-a) : static_cast<u64>(a);
    return gcd_u64(n, au);
}

// base^exp, or 0 on overflow past `cap`.
inline u64 ipow_capped(u64 base, unsigned exp, u64 cap) {
    u64 r = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (base != 0 && r > cap / base) return 0;
        r *= base;
    }
    return r;
}

inline u64 mulmod_u64(u64 a, u64 b, u64 m) {
    return static_cast<u64>((static_cast<u128>(a) * b) % m);
}

// ---------------------------------------------------------------------------
// Worker-thread knob. Every parallel loop in the library combines per-chunk
// results in chunk order, so outputs never depend on this value.
// ---------------------------------------------------------------------------

inline std::atomic<int>& thread_knob() {
    static std::atomic<int> n{0};  // 0 = use hardware_concurrency
    return n;
}

inline void set_thread_count(int n) { thread_knob().store(n); }

inline int effective_threads() {
    int n = thread_knob().load();
    if (n > 0) return n;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Splits [lo, hi) into contiguous chunks, runs `work(chunk_idx, lo_i, hi_i)`
// possibly in parallel, and returns nothing. Chunk boundaries depend only on
// the range and thread count is irrelevant to them: chunk granularity is
// fixed by `chunk_size` so results assembled per chunk are reproducible.
template <class Work>
void for_chunks(u64 lo, u64 hi, u64 chunk_size, Work&& work) {
    if (hi <= lo) return;
    std::vector<std::pair<u64, u64>> chunks;
    for (u64 s = lo; s < hi; s += chunk_size)
        chunks.emplace_back(s, std::min(hi, s + chunk_size));

    int nthreads = effective_threads();
    if (nthreads <= 1 || chunks.size() <= 1) {
        for (std::size_t i = 0; i < chunks.size(); ++i)
            work(i, chunks[i].first, chunks[i].second);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto runner = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= chunks.size()) break;
            work(i, chunks[i].first, chunks[i].second);
        }
    };
    std::vector<std::thread> pool;
    int spawn = std::min<int>(nthreads - 1, static_cast<int>(chunks.size()) - 1);
    for (int t = 0; t < spawn; ++t) pool.emplace_back(runner);
    runner();
    for (auto& th : pool) th.join();
}

}  // namespace aplab
