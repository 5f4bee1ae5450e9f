// sieve.hpp
// Segmented sieving: prime counting (plain and per-residue) and windowed
// smallest/largest-prime-factor tables. Windows are sieved segment by
// segment; segments are independent, so parallel builds and any segment
// width produce identical tables.

#pragma once

#include <cassert>
#include <cstring>
#include <map>
#include <numeric>
#include <optional>

#include "aplab/cache.hpp"
#include "aplab/common.hpp"

namespace aplab {

inline constexpr u64 kDefaultSegment = u64{1} << 22;  // entries per segment
inline constexpr u64 kDefaultMaxWindow = u64{1} << 27; // entries per table

// Simple sieve of Eratosthenes; fine for limits up to ~10^8.
inline std::vector<u64> primes_up_to(u64 n) {
    std::vector<u64> primes;
    if (n < 2) return primes;
    std::vector<u8> composite(n + 1, 0);
    for (u64 i = 2; i * i <= n; ++i)
        if (!composite[i])
            for (u64 j = i * i; j <= n; j += i) composite[j] = 1;
    for (u64 i = 2; i <= n; ++i)
        if (!composite[i]) primes.push_back(i);
    return primes;
}

// Calls fn(segment_index, lo, hi, is_prime bytes) for each segment of
// [2, limit]; segments are visited in order (single-threaded).
template <class Fn>
void for_each_prime_segment(u64 limit, Fn&& fn, u64 segment = kDefaultSegment) {
    if (limit < 2) return;
    std::vector<u64> base = primes_up_to(isqrt_u64(limit));
    std::vector<u8> is_prime;
    std::size_t idx = 0;
    for (u64 lo = 2; lo <= limit; lo += segment, ++idx) {
        u64 hi = std::min(limit, lo + segment - 1);  // inclusive
        is_prime.assign(hi - lo + 1, 1);
        for (u64 p : base) {
            if (p * p > hi) break;
            u64 start = std::max(p * p, ((lo + p - 1) / p) * p);
            for (u64 m = start; m <= hi; m += p) is_prime[m - lo] = 0;
        }
        fn(idx, lo, hi, is_prime);
    }
}

inline void for_each_prime(u64 limit, const std::function<void(u64)>& fn,
                           u64 segment = kDefaultSegment) {
    for_each_prime_segment(limit, [&](std::size_t, u64 lo, u64 hi, const std::vector<u8>& mask) {
        for (u64 n = lo; n <= hi; ++n)
            if (mask[n - lo]) fn(n);
    }, segment);
}

// pi(x). Segments are counted independently and summed in segment order,
// so the result is identical for any thread count or segment width.
inline u64 prime_count(u64 x, u64 segment = kDefaultSegment) {
    if (x < 2) return 0;
    std::vector<u64> base = primes_up_to(isqrt_u64(x));
    u64 n_segments = (x - 2) / segment + 1;
    std::vector<u64> counts(n_segments, 0);
    for_chunks(0, n_segments, 1, [&](std::size_t, u64 si, u64) {
        u64 lo = 2 + si * segment;
        u64 hi = std::min(x, lo + segment - 1);
        std::vector<u8> is_prime(hi - lo + 1, 1);
        for (u64 p : base) {
            if (p * p > hi) break;
            u64 start = std::max(p * p, ((lo + p - 1) / p) * p);
            for (u64 m = start; m <= hi; m += p) is_prime[m - lo] = 0;
        }
        counts[si] = static_cast<u64>(std::count(is_prime.begin(), is_prime.end(), u8{1}));
    });
    return std::accumulate(counts.begin(), counts.end(), u64{0});
}

// pi(x; q, a): primes p <= x with p = a (mod q). a may be any integer.
inline u64 prime_count_ap(u64 x, u64 q, i64 a) {
    if (q == 0) throw std::invalid_argument("prime_count_ap: q must be >= 1");
    u64 res = static_cast<u64>(((a % static_cast<i64>(q)) + static_cast<i64>(q)) % static_cast<i64>(q));
    u64 count = 0;
    for_each_prime(x, [&](u64 p) { if (p % q == res) ++count; });
    return count;
}

// One pass producing all residue counts mod q at once.
inline std::vector<u64> prime_residue_counts(u64 x, u64 q) {
    if (q == 0) throw std::invalid_argument("prime_residue_counts: q must be >= 1");
    std::vector<u64> counts(q, 0);
    for_each_prime(x, [&](u64 p) { ++counts[p % q]; });
    return counts;
}

// Primality bitmap for a window [lo, hi] of values; index n-lo.
inline std::vector<u8> prime_mask(u64 lo, u64 hi) {
    if (lo < 2) lo = 2;
    if (hi < lo) return {};
    std::vector<u8> mask(hi - lo + 1, 1);
    std::vector<u64> base = primes_up_to(isqrt_u64(hi));
    for (u64 p : base) {
        u64 start = std::max(p * p, ((lo + p - 1) / p) * p);
        for (u64 m = start; m <= hi; m += p) mask[m - lo] = 0;
    }
    return mask;
}

// ---------------------------------------------------------------------------
// FactorTable: per-integer smallest and largest prime factor over [lo, hi).
// ---------------------------------------------------------------------------

struct FactorTable {
    u64 lo = 0, hi = 0;       // window [lo, hi)
    std::vector<u64> spf, lpf;

    u64 spf_of(u64 n) const { assert(n >= lo && n < hi); return spf[n - lo]; }
    u64 lpf_of(u64 n) const { assert(n >= lo && n < hi); return lpf[n - lo]; }
    bool is_prime(u64 n) const { return spf_of(n) == n; }
    bool in_window(u64 n) const { return n >= lo && n < hi; }
};

struct FactorTableOptions {
    u64 segment_entries = kDefaultSegment;
    u64 max_entries = kDefaultMaxWindow;
    std::string cache_dir;  // empty = no cache
};

namespace detail {

// Sieves spf/lpf for one segment [s, e) into out arrays (indexed from s-lo).
// Base primes are divided out per entry; any cofactor left above 1 is prime
// and is the largest prime factor.
inline void sieve_factor_segment(u64 s, u64 e, u64 lo,
                                 const std::vector<u64>& base,
                                 std::vector<u64>& spf_out, std::vector<u64>& lpf_out) {
    u64 len = e - s;
    u64* spf = spf_out.data() + (s - lo);
    u64* lpf = lpf_out.data() + (s - lo);
    std::vector<u64> rem(len);
    for (u64 i = 0; i < len; ++i) { rem[i] = s + i; spf[i] = 0; lpf[i] = 0; }
    for (u64 p : base) {
        if (p * p >= e) break;
        u64 start = ((s + p - 1) / p) * p;
        for (u64 m = start; m < e; m += p) {
            u64 i = m - s;
            if (spf[i] == 0) spf[i] = p;
            while (rem[i] % p == 0) rem[i] /= p;
            lpf[i] = p;  // primes ascend, so the last hit is the largest so far
        }
    }
    for (u64 i = 0; i < len; ++i) {
        if (rem[i] > 1) lpf[i] = rem[i];        // prime cofactor above sqrt(e)
        if (spf[i] == 0) spf[i] = s + i;        // untouched => prime
    }
}

}  // namespace detail

inline FactorTable build_factor_table(u64 lo, u64 hi, const FactorTableOptions& opt = {}) {
    if (lo < 2 || lo >= hi) throw std::invalid_argument("build_factor_table: need 2 <= lo < hi");
    if (hi > kMaxInput) throw std::invalid_argument("build_factor_table: window exceeds 2^50");
    if (hi - lo > opt.max_entries)
        throw std::invalid_argument("build_factor_table: window wider than configured maximum");

    FactorTable t;
    t.lo = lo;
    t.hi = hi;
    t.spf.assign(hi - lo, 0);
    t.lpf.assign(hi - lo, 0);
    std::vector<u64> base = primes_up_to(isqrt_u64(hi - 1));

    for_chunks(lo, hi, opt.segment_entries, [&](std::size_t, u64 s, u64 e) {
        if (!opt.cache_dir.empty()) {
            if (cache::read_segment(opt.cache_dir, s, e, t.spf.data() + (s - lo),
                                    t.lpf.data() + (s - lo)))
                return;
        }
        detail::sieve_factor_segment(s, e, lo, base, t.spf, t.lpf);
        if (!opt.cache_dir.empty())
            cache::write_segment(opt.cache_dir, s, e, t.spf.data() + (s - lo),
                                 t.lpf.data() + (s - lo));
    });
    return t;
}

}  // namespace aplab
