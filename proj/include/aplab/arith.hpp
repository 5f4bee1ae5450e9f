// arith.hpp
// Single-integer arithmetic functions by trial division: factorization,
// phi, tau, mu and the smallest/largest prime factor, with the convention
// P+(1) = P-(1) = 1. Good for n up to 2^50.

#pragma once

#include <utility>

#include "aplab/common.hpp"

namespace aplab {

struct Factorization {
    u64 n = 1;
    std::vector<std::pair<u64, unsigned>> factors;  // (prime, exponent), primes ascending
};

inline Factorization factorize(u64 n) {
    if (n == 0) throw std::invalid_argument("factorize: n must be >= 1");
    if (n > kMaxInput) throw std::invalid_argument("factorize: n exceeds 2^50");
    Factorization f;
    f.n = n;
    u64 m = n;
    auto strip = [&](u64 p) {
        if (m % p) return;
        unsigned e = 0;
        while (m % p == 0) { m /= p; ++e; }
        f.factors.emplace_back(p, e);
    };
    strip(2);
    strip(3);
    for (u64 d = 5; d * d <= m; d += 6) {
        strip(d);
        strip(d + 2);
    }
    if (m > 1) f.factors.emplace_back(m, 1);
    return f;
}

struct ArithInfo {
    u64 phi = 1;
    u64 tau = 1;
    int mu = 1;
    u64 lpf = 1;  // P+(n)
    u64 spf = 1;  // P-(n)
};

inline ArithInfo arith(u64 n) {
    Factorization f = factorize(n);
    ArithInfo info;
    for (auto [p, e] : f.factors) {
        info.phi *= (p - 1);
        for (unsigned i = 1; i < e; ++i) info.phi *= p;
        info.tau *= (e + 1);
        info.mu = (e > 1) ? 0 : -info.mu;
        info.lpf = std::max(info.lpf, p);
        if (info.spf == 1) info.spf = p;  // ascending, first prime is smallest
    }
    if (f.factors.empty()) info.mu = 1;  // n = 1
    return info;
}

inline u64 phi_u64(u64 n) { return arith(n).phi; }
inline u64 tau_u64(u64 n) { return arith(n).tau; }
inline int mobius(u64 n) { return arith(n).mu; }

inline std::vector<u64> divisors(u64 n) {
    Factorization f = factorize(n);
    std::vector<u64> divs{1};
    for (auto [p, e] : f.factors) {
        std::size_t count = divs.size();
        u64 pk = 1;
        for (unsigned i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < count; ++j) divs.push_back(divs[j] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

inline bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    if (n % 3 == 0) return n == 3;
    for (u64 d = 5; d * d <= n; d += 6)
        if (n % d == 0 || n % (d + 2) == 0) return false;
    return true;
}

}  // namespace aplab
