// eps.hpp
// Values of the form c + k*eps for an infinitesimal eps > 0, ordered
// lexicographically. Only the linear regime is supported: sums, differences
// and rational scaling. eps*eps never arises in exponent systems.

#pragma once

#include <string>

#include "aplab/rational.hpp"

namespace aplab {

struct EpsRational {
    Rat c{0};  // constant part
    Rat e{0};  // coefficient of eps

    EpsRational() = default;
    EpsRational(Rat c_, Rat e_ = Rat(0)) : c(std::move(c_)), e(std::move(e_)) {}
    static EpsRational eps(Rat k = Rat(1)) { return EpsRational(Rat(0), std::move(k)); }
};

inline int eps_compare(const EpsRational& u, const EpsRational& v) {
    int cc = cmp(u.c, v.c);
    if (cc != 0) return cc;
    return cmp(u.e, v.e);
}

inline bool operator==(const EpsRational& a, const EpsRational& b) { return eps_compare(a, b) == 0; }
inline bool operator!=(const EpsRational& a, const EpsRational& b) { return eps_compare(a, b) != 0; }
inline bool operator<(const EpsRational& a, const EpsRational& b) { return eps_compare(a, b) < 0; }
inline bool operator<=(const EpsRational& a, const EpsRational& b) { return eps_compare(a, b) <= 0; }
inline bool operator>(const EpsRational& a, const EpsRational& b) { return eps_compare(a, b) > 0; }
inline bool operator>=(const EpsRational& a, const EpsRational& b) { return eps_compare(a, b) >= 0; }

inline EpsRational operator+(const EpsRational& a, const EpsRational& b) {
    return EpsRational(a.c + b.c, a.e + b.e);
}
inline EpsRational operator-(const EpsRational& a, const EpsRational& b) {
    return EpsRational(a.c - b.c, a.e - b.e);
}
inline EpsRational operator-(const EpsRational& a) { return EpsRational(-a.c, -a.e); }
inline EpsRational operator*(const Rat& k, const EpsRational& a) {
    return EpsRational(k * a.c, k * a.e);
}
inline EpsRational operator/(const EpsRational& a, const Rat& k) {
    return EpsRational(a.c / k, a.e / k);
}

// "17/32 - 3e", "0", "e", "-2e", "1/2 + e"
inline std::string eps_str(const EpsRational& v) {
    std::string out;
    if (v.c != 0 || v.e == 0) out = rat_str(v.c);
    if (v.e != 0) {
        Rat k = abs(v.e);
        std::string term = (k == 1) ? "e" : rat_str(k) + "e";
        if (out.empty())
            out = (sgn(v.e) < 0 ? "-" : "") + term;
        else
            out += (sgn(v.e) < 0 ? " - " : " + ") + term;
    }
    return out;
}

}  // namespace aplab
