// rational.hpp
// Exact rational scalar (GMP mpq) plus the integer-exact power comparisons
// used for smoothness thresholds and dyadic windows: boundaries like
// n <= x^beta are always decided by comparing n^den against x^num in
// integer arithmetic, never through floating point.

#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "aplab/common.hpp"

namespace aplab {

using Rat = mpq_class;

inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline double rat_dbl(const Rat& r) { return r.get_d(); }

inline Rat rat_of(i64 num, i64 den = 1) {
    Rat r(static_cast<long>(num), static_cast<long>(den));
    r.canonicalize();
    return r;
}

// Accepts "a/b", plain integers and exact decimal strings ("0.35" -> 7/20).
inline Rat parse_rational(const std::string& text) {
    std::string s = text;
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    std::size_t dot = s.find('.');
    if (dot != std::string::npos) {
        if (s.find('/') != std::string::npos)
            throw std::invalid_argument("bad rational literal: " + text);
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        std::size_t frac_len = s.size() - dot - 1;
        if (frac_len == 0 || digits.empty())
            throw std::invalid_argument("bad rational literal: " + text);
        mpz_class num(digits, 10);
        mpz_class den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
        Rat r(num, den);
        r.canonicalize();
        return r;
    }
    Rat r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + text);
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
    r.canonicalize();
    return r;
}

// unsigned long is 64-bit on this platform, so u64 round-trips directly.
static_assert(sizeof(unsigned long) == 8);

inline mpz_class mpz_pow(u64 base, unsigned long exp) {
    mpz_class z;
    mpz_class b(static_cast<unsigned long>(base));
    mpz_pow_ui(z.get_mpz_t(), b.get_mpz_t(), exp);
    return z;
}

inline u64 mpz_to_u64(const mpz_class& z) { return static_cast<u64>(z.get_ui()); }

// Largest integer T with T^den <= x^num, i.e. floor(x^(num/den)).
// `expo` must be positive.
inline u64 floor_pow(u64 x, const Rat& expo) {
    if (x == 0) return 0;
    if (sgn(expo) <= 0) throw std::invalid_argument("floor_pow: exponent must be positive");
    unsigned long num = static_cast<unsigned long>(expo.get_num().get_ui());
    unsigned long den = static_cast<unsigned long>(expo.get_den().get_ui());
    if (!expo.get_num().fits_ulong_p() || !expo.get_den().fits_ulong_p())
        throw std::invalid_argument("floor_pow: exponent too complex");
    mpz_class p = mpz_pow(x, num);
    mpz_class root;
    mpz_root(root.get_mpz_t(), p.get_mpz_t(), den);
    return mpz_to_u64(root);
}

// Integer window for the dyadic range (x^expo, 2*x^expo]: returns inclusive
// bounds [lo, hi]; empty when lo > hi.
struct IntWindow {
    u64 lo = 1, hi = 0;
    bool empty() const { return lo > hi; }
    bool contains(u64 n) const { return lo <= n && n <= hi; }
    u64 size() const { return empty() ? 0 : hi - lo + 1; }
};

inline IntWindow dyadic_window(u64 x, const Rat& expo) {
    unsigned long num = static_cast<unsigned long>(expo.get_num().get_ui());
    unsigned long den = static_cast<unsigned long>(expo.get_den().get_ui());
    if (sgn(expo) <= 0) throw std::invalid_argument("dyadic_window: exponent must be positive");
    mpz_class p = mpz_pow(x, num);
    mpz_class lo_root, hi_root;
    mpz_root(lo_root.get_mpz_t(), p.get_mpz_t(), den);  // floor(x^expo)
    mpz_class p2 = p << den;                            // (2 x^expo)^den
    mpz_root(hi_root.get_mpz_t(), p2.get_mpz_t(), den); // floor(2 x^expo)
    return IntWindow{mpz_to_u64(lo_root) + 1, mpz_to_u64(hi_root)};
}

// Exact decimal rendering. Rationals with terminating expansions are printed
// in full ("17/32" -> "0.53125"); everything else is truncated to `digits`
// decimals, matching the trailing-dots convention of printed constants.
inline std::string decimal_render(const Rat& r, int digits = 4) {
    bool neg = sgn(r) < 0;
    Rat v = abs(r);
    mpz_class den = v.get_den();
    // strip factors of 2 and 5
    mpz_class d = den;
    int twos = 0, fives = 0;
    while (mpz_even_p(d.get_mpz_t())) { d >>= 1; ++twos; }
    while (mpz_divisible_ui_p(d.get_mpz_t(), 5)) { mpz_divexact_ui(d.get_mpz_t(), d.get_mpz_t(), 5); ++fives; }
    bool terminating = (d == 1);
    int places = terminating ? std::max(twos, fives) : digits;
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, places);
    mpz_class scaled = (v.get_num() * scale) / v.get_den();  // truncation
    std::string digits_str = scaled.get_str();
    while (static_cast<int>(digits_str.size()) <= places) digits_str.insert(digits_str.begin(), '0');
    std::string out = digits_str.substr(0, digits_str.size() - places);
    if (places > 0) out += "." + digits_str.substr(digits_str.size() - places);
    if (neg) out = "-" + out;
    return out;
}

// Truncated rendering of an irrational value held in a double. The values we
// render sit far from the truncation boundaries, so double precision is safe.
inline std::string decimal_render(double v, int digits = 4) {
    bool neg = v < 0;
    double a = neg ? -v : v;
    double scale = std::pow(10.0, digits);
    u64 scaled = static_cast<u64>(a * scale);
    std::string digits_str = std::to_string(scaled);
    while (static_cast<int>(digits_str.size()) <= digits) digits_str.insert(digits_str.begin(), '0');
    std::string out = digits_str.substr(0, digits_str.size() - digits) + "." +
                      digits_str.substr(digits_str.size() - digits);
    if (neg) out = "-" + out;
    return out;
}

}  // namespace aplab
