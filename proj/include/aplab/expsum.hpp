// expsum.hpp
// Complete Kloosterman sums S(m,n;c) by exact enumeration over units mod c,
// Ramanujan sums via the Mobius identity, and a bulk auditor for the bound
// |S(m,n;c)| <= tau(c) sqrt(c) gcd(m,n,c)^(1/2).
//
// Phases are always reduced to the exact integer residue (m*b + n*binv) mod c
// before any floating conversion. kloosterman() accumulates the full complex
// sum (the imaginary part is reported as a residual); the auditor uses the
// b <-> c-b pairing, which makes each sum a sum of cosines. The two paths are
// cross-checked in the property suites.

#pragma once

#include <cmath>
#include <random>

#include "aplab/arith.hpp"
#include "aplab/common.hpp"

namespace aplab {

inline constexpr u64 kKloostermanMaxC = 10'000'000;
inline constexpr u64 kWeilFullMaxC = 300;
inline constexpr u64 kWeilSampledMaxC = 100'000;

namespace detail {

inline u64 extgcd_inverse(u64 a, u64 m) {
    i64 t = 0, new_t = 1;
    i64 r = static_cast<i64>(m), new_r = static_cast<i64>(a % m);
    while (new_r != 0) {
        i64 q = r / new_r;
        t -= q * new_t; std::swap(t, new_t);
        r -= q * new_r; std::swap(r, new_r);
    }
    if (r != 1) throw std::invalid_argument("extgcd_inverse: not invertible");
    if (t < 0) t += static_cast<i64>(m);
    return static_cast<u64>(t);
}

// Units mod c in ascending order and their inverses, via one extended gcd
// plus batched prefix products.
struct UnitTable {
    std::vector<u32> units;
    std::vector<u32> inv;  // inv[i] = units[i]^-1 mod c
};

inline void batch_invert(u64 c, UnitTable& t) {
    std::size_t k = t.units.size();
    t.inv.resize(k);
    std::vector<u64> prefix(k);
    u64 acc = 1;
    for (std::size_t i = 0; i < k; ++i) {
        prefix[i] = acc;
        acc = acc * t.units[i] % c;  // c <= 1e7, no 128-bit needed
    }
    u64 inv_acc = extgcd_inverse(acc, c);
    for (std::size_t i = k; i-- > 0;) {
        t.inv[i] = static_cast<u32>(inv_acc * prefix[i] % c);
        inv_acc = inv_acc * t.units[i] % c;
    }
}

inline UnitTable unit_inverses(u64 c) {
    UnitTable t;
    if (c == 1) return t;
    t.units.reserve(static_cast<std::size_t>(c / 2));
    for (u64 b = 1; b < c; ++b)
        if (gcd_u64(b, c) == 1) t.units.push_back(static_cast<u32>(b));
    batch_invert(c, t);
    return t;
}

// Units in [1, c/2] only (enough for the paired cosine path). Unit detection
// marks multiples of the prime divisors of c instead of running a gcd per b.
inline UnitTable unit_inverses_half(u64 c, const Factorization& fac) {
    UnitTable t;
    if (c == 1) return t;
    u64 half = c / 2;
    std::vector<u8> blocked(half + 1, 0);
    for (auto [p, e] : fac.factors)
        for (u64 m = p; m <= half; m += p) blocked[m] = 1;
    t.units.reserve(half / 2 + 1);
    for (u64 b = 1; b <= half; ++b)
        if (!blocked[b]) t.units.push_back(static_cast<u32>(b));
    batch_invert(c, t);
    return t;
}

}  // namespace detail

struct KloostermanValue {
    i64 m = 0, n = 0;
    u64 c = 1;
    double value = 0;          // the (real) sum
    double imag_residual = 0;  // numerical residual of the imaginary part
};

inline KloostermanValue kloosterman(i64 m, i64 n, u64 c) {
    if (c < 1) throw std::invalid_argument("kloosterman: c must be >= 1");
    if (c > kKloostermanMaxC) throw budget_error("kloosterman: c exceeds enumeration budget");
    KloostermanValue out{m, n, c, 0.0, 0.0};
    if (c == 1) {
        out.value = 1.0;  // single empty-phase term
        return out;
    }
    u64 mr = static_cast<u64>(((m % static_cast<i64>(c)) + static_cast<i64>(c)) % static_cast<i64>(c));
    u64 nr = static_cast<u64>(((n % static_cast<i64>(c)) + static_cast<i64>(c)) % static_cast<i64>(c));
    detail::UnitTable units = detail::unit_inverses(c);
    const double two_pi = 2.0 * M_PI;
    long double re = 0, re_comp = 0, im = 0, im_comp = 0;
    auto kahan = [](long double& sum, long double& comp, long double term) {
        long double y = term - comp;
        long double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    };
    for (std::size_t i = 0; i < units.units.size(); ++i) {
        u64 r = (mr * units.units[i] + nr * units.inv[i]) % c;
        double angle = two_pi * static_cast<double>(r) / static_cast<double>(c);
        kahan(re, re_comp, std::cos(angle));
        kahan(im, im_comp, std::sin(angle));
    }
    out.value = static_cast<double>(re);
    out.imag_residual = static_cast<double>(im);
    return out;
}

// S(m,0;c) through sum_{d | gcd(m,c)} d * mu(c/d); exact integers.
inline i64 ramanujan(i64 m, u64 c) {
    if (c < 1) throw std::invalid_argument("ramanujan: c must be >= 1");
    if (c == 1) return 1;
    u64 g = (m == 0) ? c : gcd_i(c, m);
    i64 sum = 0;
    for (u64 d : divisors(g)) sum += static_cast<i64>(d) * mobius(c / d);
    return sum;
}

// ---------------------------------------------------------------------------
// Weil bound audit
// ---------------------------------------------------------------------------

struct WeilAuditResult {
    double max_ratio = 0;
    u64 witness_m = 0, witness_n = 0, witness_c = 0;
    u64 tested = 0;
    std::string prng = "none";
    u64 seed = 0;
};

namespace detail {

// |S(m,n;c)| via the b <-> c-b pairing: twice the cosine sum over units in
// the lower half. Callers pass reduced residues.
inline double kloosterman_abs_paired(u64 m, u64 n, u64 c, const UnitTable& units) {
    if (c == 1) return 1.0;
    const double two_pi = 2.0 * M_PI;
    long double sum = 0, comp = 0;
    for (std::size_t i = 0; i < units.units.size(); ++i) {
        u64 b = units.units[i];
        if (2 * b > c) break;  // partner already counted
        u64 r = (m * b + n * units.inv[i]) % c;
        long double term = std::cos(two_pi * static_cast<double>(r) / static_cast<double>(c));
        if (2 * b != c) term *= 2.0L;
        long double y = term - comp;
        long double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return std::fabs(static_cast<double>(sum));
}

struct CResult {
    double max_ratio = -1;
    u64 m = 0, n = 0, c = 0;
    u64 tested = 0;
};

// Exhausts all (m,n) mod c, (m,n) != (0,0); cosine phase table per c.
inline CResult audit_one_c(u64 c) {
    CResult best;
    best.c = c;
    if (c < 2) return best;  // c = 1 has no admissible pair
    UnitTable units = unit_inverses(c);
    std::vector<double> cos_table(c);
    for (u64 r = 0; r < c; ++r)
        cos_table[r] = std::cos(2.0 * M_PI * static_cast<double>(r) / static_cast<double>(c));
    double tau_sqrt = static_cast<double>(tau_u64(c)) * std::sqrt(static_cast<double>(c));
    std::vector<u64> nbinv(units.units.size());
    std::vector<u64> mb(units.units.size());
    for (u64 n = 0; n < c; ++n) {
        for (std::size_t i = 0; i < units.inv.size(); ++i) nbinv[i] = n * units.inv[i] % c;
        std::fill(mb.begin(), mb.end(), 0);  // m = 0 row
        for (u64 m = 0; m < c; ++m) {
            if (m != 0 || n != 0) {
                long double sum = 0;
                for (std::size_t i = 0; i < units.units.size(); ++i) {
                    u64 r = mb[i] + nbinv[i];
                    if (r >= c) r -= c;
                    sum += cos_table[r];
                }
                double g = static_cast<double>(gcd_u64(gcd_u64(m, n), c));
                double ratio = std::fabs(static_cast<double>(sum)) / (tau_sqrt * std::sqrt(g));
                ++best.tested;
                if (ratio > best.max_ratio) {
                    best.max_ratio = ratio;
                    best.m = m;
                    best.n = n;
                }
            }
            for (std::size_t i = 0; i < units.units.size(); ++i) {
                mb[i] += units.units[i];
                if (mb[i] >= c) mb[i] -= c;
            }
        }
    }
    return best;
}

}  // namespace detail

// Exhaustive audit over all moduli c <= c_max and all residue pairs.
inline WeilAuditResult weil_audit_full(u64 c_max) {
    if (c_max > kWeilFullMaxC)
        throw budget_error("weil_audit: full mode is limited to c <= 300");
    std::vector<detail::CResult> per_c(c_max + 1);
    for_chunks(2, c_max + 1, 1, [&](std::size_t, u64 c, u64) { per_c[c] = detail::audit_one_c(c); });
    WeilAuditResult out;
    for (u64 c = 2; c <= c_max; ++c) {
        out.tested += per_c[c].tested;
        if (per_c[c].max_ratio > out.max_ratio) {
            out.max_ratio = per_c[c].max_ratio;
            out.witness_m = per_c[c].m;
            out.witness_n = per_c[c].n;
            out.witness_c = c;
        }
    }
    return out;
}

inline u64 uniform_below(std::mt19937_64& gen, u64 bound) {
    // rejection sampling; unbiased and identical on every platform
    u64 limit = std::numeric_limits<u64>::max() - std::numeric_limits<u64>::max() % bound;
    u64 v;
    do { v = gen(); } while (v >= limit);
    return v % bound;
}

// Random triples (m,n,c), c uniform in [2, c_max], (m,n) uniform mod c and
// not both zero. Samples are drawn up front; evaluation parallelizes over
// the sample list with an order-fixed reduction.
inline WeilAuditResult weil_audit_sampled(u64 c_max, u64 samples, u64 seed) {
    if (c_max > kWeilSampledMaxC)
        throw budget_error("weil_audit: sampled mode is limited to c <= 100000");
    if (c_max < 2) throw std::invalid_argument("weil_audit: need c_max >= 2");
    std::mt19937_64 gen(seed);
    struct Triple { u64 m, n, c; };
    std::vector<Triple> triples(samples);
    for (u64 i = 0; i < samples; ++i) {
        u64 c = 2 + uniform_below(gen, c_max - 1);
        u64 m, n;
        do {
            m = uniform_below(gen, c);
            n = uniform_below(gen, c);
        } while (m == 0 && n == 0);
        triples[i] = {m, n, c};
    }
    std::vector<double> ratios(samples);
    u64 chunk = std::max<u64>(1, samples / (8 * std::max(1, effective_threads())));
    for_chunks(0, samples, chunk, [&](std::size_t, u64 lo, u64 hi) {
        for (u64 i = lo; i < hi; ++i) {
            auto [m, n, c] = triples[i];
            Factorization fac = factorize(c);
            detail::UnitTable units = detail::unit_inverses_half(c, fac);
            double s = detail::kloosterman_abs_paired(m, n, c, units);
            double g = static_cast<double>(gcd_u64(gcd_u64(m, n), c));
            u64 tau = 1;
            for (auto [p, e] : fac.factors) tau *= (e + 1);
            double denom = static_cast<double>(tau) *
                           std::sqrt(static_cast<double>(c)) * std::sqrt(g);
            ratios[i] = s / denom;
        }
    });
    WeilAuditResult out;
    out.prng = "mt19937_64";
    out.seed = seed;
    out.tested = samples;
    for (u64 i = 0; i < samples; ++i) {
        if (ratios[i] > out.max_ratio) {
            out.max_ratio = ratios[i];
            out.witness_m = triples[i].m;
            out.witness_n = triples[i].n;
            out.witness_c = triples[i].c;
        }
    }
    return out;
}

}  // namespace aplab
