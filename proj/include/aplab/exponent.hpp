// exponent.hpp
// Exact linear inequality systems over log-x exponents: feasibility,
// Fourier-Motzkin projection, supremum computation with attainment
// tracking, and entailment checking with margins, witnesses and
// eps-rescaling diagnostics. All arithmetic is exact rational; strictness
// propagates through every combination (strict + anything = strict).

#pragma once

#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "aplab/eps.hpp"

namespace aplab {

// ---------------------------------------------------------------------------
// Linear forms and constraints
// ---------------------------------------------------------------------------

struct LinearForm {
    std::map<std::string, Rat> coeffs;  // ordered: deterministic iteration

    Rat coeff(const std::string& s) const {
        auto it = coeffs.find(s);
        return it == coeffs.end() ? Rat(0) : it->second;
    }
    void add(const std::string& s, const Rat& k) {
        if (k == 0) return;
        Rat& c = coeffs[s];
        c += k;
        if (c == 0) coeffs.erase(s);
    }
    bool empty() const { return coeffs.empty(); }
};

inline LinearForm operator+(LinearForm a, const LinearForm& b) {
    for (const auto& [s, k] : b.coeffs) a.add(s, k);
    return a;
}

inline LinearForm operator*(const Rat& k, const LinearForm& f) {
    LinearForm r;
    if (k == 0) return r;
    for (const auto& [s, c] : f.coeffs) r.coeffs[s] = k * c;
    return r;
}

// sum(coeffs * vars) REL bound, REL in {<, <=}
struct LinearConstraint {
    LinearForm lhs;
    EpsRational bound;
    bool strict = true;

    bool holds_at(const EpsRational& value) const {
        return strict ? value < bound : value <= bound;
    }
};

struct ConstraintSystem {
    std::string name;
    std::vector<std::string> symbols;
    std::vector<LinearConstraint> constraints;
    bool implicit_nonneg = false;
    std::string description;

    bool has_symbol(const std::string& s) const {
        return std::find(symbols.begin(), symbols.end(), s) != symbols.end();
    }
    void require_declared(const LinearForm& f) const {
        for (const auto& [s, k] : f.coeffs)
            if (!has_symbol(s))
                throw std::invalid_argument("undeclared symbol '" + s + "' in system " + name);
    }
    void add_constraint(LinearConstraint c) {
        require_declared(c.lhs);
        constraints.push_back(std::move(c));
    }
};

// target symbol -> linear form in source symbols plus an optional constant.
struct Substitution {
    struct Image {
        LinearForm form;
        EpsRational shift;  // usually 0
    };
    std::map<std::string, Image> map;

    static Substitution identity() { return {}; }
};

// ---------------------------------------------------------------------------
// Formatting
// ---------------------------------------------------------------------------

inline std::string form_str(const LinearForm& f) {
    if (f.empty()) return "0";
    std::string out;
    for (const auto& [s, k] : f.coeffs) {
        Rat a = abs(k);
        std::string term = (a == 1) ? s : rat_str(a) + s;
        if (out.empty())
            out = (sgn(k) < 0 ? "-" : "") + term;
        else
            out += (sgn(k) < 0 ? " - " : " + ") + term;
    }
    return out;
}

inline std::string constraint_str(const LinearConstraint& c) {
    return form_str(c.lhs) + (c.strict ? " < " : " <= ") + eps_str(c.bound);
}

// ---------------------------------------------------------------------------
// Parsing. Grammar (whitespace-insensitive):
//   constraint := expr ('<' | '<=' | '>' | '>=') expr
//   expr       := ['-'] term (('+'|'-') term)*
//   term       := rational | rational ident | ident
// The bare identifier 'e' denotes eps; all other identifiers are symbols.
// ---------------------------------------------------------------------------

namespace detail {

struct ParsedExpr {
    LinearForm form;
    EpsRational constant;
};

inline ParsedExpr parse_expr(const std::string& text) {
    ParsedExpr out;
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip_ws();
    if (i >= text.size()) throw std::invalid_argument("empty expression");
    int sign = 1;
    bool expect_term = true;
    while (true) {
        skip_ws();
        if (i >= text.size()) break;
        char ch = text[i];
        if (ch == '+' || ch == '-') {
            if (expect_term && ch == '-') { sign = -sign; ++i; continue; }
            if (expect_term) { ++i; continue; }
            sign = (ch == '-') ? -1 : 1;
            ++i;
            expect_term = true;
            continue;
        }
        if (!expect_term) throw std::invalid_argument("unexpected token in expression: " + text);
        Rat coeff(1);
        bool saw_number = false;
        if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '.') {
            std::size_t start = i;
            while (i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])) ||
                                       text[i] == '/' || text[i] == '.'))
                ++i;
            coeff = parse_rational(text.substr(start, i - start));
            saw_number = true;
            while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
            if (i < text.size() && text[i] == '*') ++i;
            while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        }
        std::string ident;
        if (i < text.size() && (std::isalpha(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
            std::size_t start = i;
            while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
                ++i;
            ident = text.substr(start, i - start);
        }
        if (ident.empty() && !saw_number)
            throw std::invalid_argument("unexpected token in expression: " + text);
        Rat signed_coeff = (sign < 0) ? Rat(-coeff) : coeff;
        if (ident.empty())
            out.constant.c += signed_coeff;
        else if (ident == "e" || ident == "eps")
            out.constant.e += signed_coeff;
        else
            out.form.add(ident, signed_coeff);
        sign = 1;
        expect_term = false;
    }
    if (expect_term) throw std::invalid_argument("dangling operator in expression: " + text);
    return out;
}

}  // namespace detail

inline LinearForm parse_linear_form(const std::string& text) {
    auto parsed = detail::parse_expr(text);
    if (parsed.constant.c != 0 || parsed.constant.e != 0)
        throw std::invalid_argument("constant term not allowed here: " + text);
    return parsed.form;
}

inline EpsRational parse_eps_value(const std::string& text) {
    auto parsed = detail::parse_expr(text);
    if (!parsed.form.empty())
        throw std::invalid_argument("expected a constant, got symbols: " + text);
    return parsed.constant;
}

inline LinearConstraint parse_constraint(const std::string& text) {
    // find relation
    std::size_t pos = std::string::npos;
    std::string rel;
    for (std::size_t i = 0; i + 1 <= text.size(); ++i) {
        if (text[i] == '<' || text[i] == '>') {
            pos = i;
            rel = text.substr(i, (i + 1 < text.size() && text[i + 1] == '=') ? 2 : 1);
            break;
        }
    }
    if (pos == std::string::npos) throw std::invalid_argument("no relation in constraint: " + text);
    auto lhs = detail::parse_expr(text.substr(0, pos));
    auto rhs = detail::parse_expr(text.substr(pos + rel.size()));
    bool flip = (rel[0] == '>');
    bool strict = (rel.size() == 1);
    LinearConstraint c;
    if (!flip) {
        c.lhs = lhs.form + Rat(-1) * rhs.form;
        c.bound = rhs.constant - lhs.constant;
    } else {
        c.lhs = rhs.form + Rat(-1) * lhs.form;
        c.bound = lhs.constant - rhs.constant;
    }
    c.strict = strict;
    return c;
}

// "q=15/32, r=1/32-2e" -> point assignment
inline std::map<std::string, EpsRational> parse_point(const std::string& text) {
    std::map<std::string, EpsRational> pt;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t comma = text.find(',', start);
        std::string part = text.substr(start, comma == std::string::npos ? std::string::npos
                                                                          : comma - start);
        std::size_t eq = part.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("bad point component: " + part);
        std::string key = part.substr(0, eq);
        key.erase(std::remove_if(key.begin(), key.end(),
                                 [](unsigned char c) { return std::isspace(c); }),
                  key.end());
        pt[key] = parse_eps_value(part.substr(eq + 1));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return pt;
}

// Parses a system from text, one constraint per line ('#' starts a comment).
// Symbols are collected from the constraints in order of first appearance.
inline ConstraintSystem parse_system(const std::string& text, const std::string& name = "user") {
    ConstraintSystem sys;
    sys.name = name;
    std::istringstream in(text);
    std::string line;
    std::vector<LinearConstraint> parsed;
    while (std::getline(in, line)) {
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        bool blank = true;
        for (char ch : line)
            if (!std::isspace(static_cast<unsigned char>(ch))) { blank = false; break; }
        if (blank) continue;
        parsed.push_back(parse_constraint(line));
    }
    for (const auto& c : parsed)
        for (const auto& [s, k] : c.lhs.coeffs)
            if (!sys.has_symbol(s)) sys.symbols.push_back(s);
    sys.constraints = std::move(parsed);
    return sys;
}

// ---------------------------------------------------------------------------
// Point checking
// ---------------------------------------------------------------------------

struct CheckResult {
    bool ok = true;
    std::optional<std::size_t> first_violation;  // index into constraints
    std::vector<EpsRational> values;             // evaluated lhs per constraint
};

inline EpsRational evaluate_form(const LinearForm& f,
                                 const std::map<std::string, EpsRational>& point) {
    EpsRational v;
    for (const auto& [s, k] : f.coeffs) {
        auto it = point.find(s);
        if (it == point.end()) throw std::invalid_argument("point is missing symbol '" + s + "'");
        v = v + k * it->second;
    }
    return v;
}

inline CheckResult check_point(const ConstraintSystem& sys,
                               const std::map<std::string, EpsRational>& point) {
    for (const auto& s : sys.symbols)
        if (!point.count(s)) throw std::invalid_argument("point is missing symbol '" + s + "'");
    CheckResult res;
    for (std::size_t i = 0; i < sys.constraints.size(); ++i) {
        EpsRational v = evaluate_form(sys.constraints[i].lhs, point);
        res.values.push_back(v);
        if (res.ok && !sys.constraints[i].holds_at(v)) {
            res.ok = false;
            res.first_violation = i;
        }
    }
    if (res.ok && sys.implicit_nonneg) {
        for (const auto& s : sys.symbols)
            if (point.at(s) < EpsRational()) {
                res.ok = false;
                break;
            }
    }
    return res;
}

// ---------------------------------------------------------------------------
// Fourier-Motzkin elimination
// ---------------------------------------------------------------------------

namespace detail {

// Scale so the first nonzero coefficient has absolute value 1; used only as
// a dedup key, combined with the scaled bound and strictness.
inline std::string canonical_key(const LinearConstraint& c) {
    Rat scale(1);
    for (const auto& [s, k] : c.lhs.coeffs) { scale = abs(k); break; }
    std::string key;
    for (const auto& [s, k] : c.lhs.coeffs) key += s + ":" + rat_str(k / scale) + ";";
    key += "|" + rat_str(c.bound.c / scale) + "," + rat_str(c.bound.e / scale);
    key += c.strict ? "<" : "=";
    return key;
}

// Ground row (no symbols): true, false, or not ground.
enum class GroundState { not_ground, holds, fails };

inline GroundState ground_state(const LinearConstraint& c) {
    if (!c.lhs.empty()) return GroundState::not_ground;
    EpsRational zero;
    bool ok = c.strict ? zero < c.bound : zero <= c.bound;
    return ok ? GroundState::holds : GroundState::fails;
}

}  // namespace detail

// Projects the system onto symbols \ {symbol}. Tautological ground rows are
// dropped; contradictory ground rows are kept so infeasibility is visible.
inline ConstraintSystem fm_eliminate(const ConstraintSystem& sys, const std::string& symbol) {
    if (!sys.has_symbol(symbol))
        throw std::invalid_argument("fm_eliminate: unknown symbol '" + symbol + "'");
    std::vector<LinearConstraint> uppers, lowers, rest;
    for (const auto& c : sys.constraints) {
        Rat k = c.lhs.coeff(symbol);
        if (k > 0)
            uppers.push_back(c);
        else if (k < 0)
            lowers.push_back(c);
        else
            rest.push_back(c);
    }
    if (sys.implicit_nonneg) {
        LinearConstraint nonneg;  // -symbol <= 0
        nonneg.lhs.add(symbol, Rat(-1));
        nonneg.bound = EpsRational();
        nonneg.strict = false;
        lowers.push_back(nonneg);
    }

    ConstraintSystem out;
    out.name = sys.name;
    out.implicit_nonneg = sys.implicit_nonneg;
    out.description = sys.description;
    for (const auto& s : sys.symbols)
        if (s != symbol) out.symbols.push_back(s);

    std::set<std::string> seen;
    auto push = [&](LinearConstraint c) {
        auto g = detail::ground_state(c);
        if (g == detail::GroundState::holds) return;
        std::string key = detail::canonical_key(c);
        if (seen.insert(key).second) out.constraints.push_back(std::move(c));
    };
    for (const auto& c : rest) push(c);
    for (const auto& up : uppers) {
        Rat a = up.lhs.coeff(symbol);
        for (const auto& lo : lowers) {
            Rat d = -lo.lhs.coeff(symbol);
            // d*up + a*lo cancels the symbol
            LinearConstraint c;
            c.lhs = d * up.lhs + a * lo.lhs;
            c.lhs.coeffs.erase(symbol);  // exact cancellation
            c.bound = d * up.bound + a * lo.bound;
            c.strict = up.strict || lo.strict;
            push(std::move(c));
        }
    }
    return out;
}

inline bool feasible(const ConstraintSystem& sys) {
    ConstraintSystem cur = sys;
    for (auto symbols = cur.symbols; !symbols.empty(); symbols = cur.symbols)
        cur = fm_eliminate(cur, symbols.front());
    for (const auto& c : cur.constraints)
        if (detail::ground_state(c) == detail::GroundState::fails) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Supremum of a linear objective
// ---------------------------------------------------------------------------

struct MaximizeResult {
    EpsRational sup;
    bool attained = false;
};

namespace detail {

// Eliminates all symbols except `keep`; returns the projected system.
inline ConstraintSystem project_to(const ConstraintSystem& sys, const std::string& keep) {
    ConstraintSystem cur = sys;
    bool progress = true;
    while (progress) {
        progress = false;
        for (const auto& s : cur.symbols) {
            if (s == keep) continue;
            cur = fm_eliminate(cur, s);
            progress = true;
            break;
        }
    }
    return cur;
}

}  // namespace detail

inline MaximizeResult maximize(const ConstraintSystem& sys, const LinearForm& objective) {
    sys.require_declared(objective);
    if (!feasible(sys)) throw std::invalid_argument("maximize: system '" + sys.name + "' is infeasible");

    static const std::string kObj = "__obj";
    ConstraintSystem work = sys;
    if (work.has_symbol(kObj)) throw std::invalid_argument("maximize: reserved symbol in system");
    work.symbols.push_back(kObj);
    LinearConstraint up, dn;  // __obj - objective <= 0 and >= 0
    up.lhs.add(kObj, Rat(1));
    up.lhs = up.lhs + Rat(-1) * objective;
    up.strict = false;
    dn.lhs.add(kObj, Rat(-1));
    dn.lhs = dn.lhs + objective;
    dn.strict = false;
    // The objective variable is an alias, not a magnitude: exempt it from
    // implicit nonnegativity by adding the pair before projection.
    work.constraints.push_back(up);
    work.constraints.push_back(dn);
    if (work.implicit_nonneg) {
        // implicit_nonneg applies to declared problem symbols only
        ConstraintSystem expanded = work;
        expanded.implicit_nonneg = false;
        for (const auto& s : sys.symbols) {
            LinearConstraint nn;
            nn.lhs.add(s, Rat(-1));
            nn.strict = false;
            expanded.constraints.push_back(nn);
        }
        work = expanded;
    }

    ConstraintSystem proj = detail::project_to(work, kObj);
    std::optional<EpsRational> best;
    bool best_strict = false;
    for (const auto& c : proj.constraints) {
        Rat k = c.lhs.coeff(kObj);
        if (k > 0) {
            EpsRational b = c.bound / k;
            if (!best || b < *best) {
                best = b;
                best_strict = c.strict;
            } else if (b == *best && c.strict) {
                best_strict = true;
            }
        }
    }
    if (!best) throw std::invalid_argument("maximize: objective is unbounded above");
    return MaximizeResult{*best, !best_strict};
}

// ---------------------------------------------------------------------------
// Feasible points (used for witnesses)
// ---------------------------------------------------------------------------

// Back-substitution through the FM cascade: eliminate symbols one by one,
// then assign them in reverse, picking an interior value of each interval.
inline std::map<std::string, EpsRational> feasible_point(const ConstraintSystem& sys) {
    if (!feasible(sys)) throw std::invalid_argument("feasible_point: infeasible system");
    ConstraintSystem cur = sys;
    if (cur.implicit_nonneg) {
        cur.implicit_nonneg = false;
        for (const auto& s : sys.symbols) {
            LinearConstraint nn;
            nn.lhs.add(s, Rat(-1));
            nn.strict = false;
            cur.constraints.push_back(nn);
        }
    }
    std::vector<std::pair<std::string, ConstraintSystem>> stages;  // system *before* eliminating symbol
    while (!cur.symbols.empty()) {
        std::string s = cur.symbols.front();
        stages.emplace_back(s, cur);
        cur = fm_eliminate(cur, s);
    }
    std::map<std::string, EpsRational> point;
    for (auto it = stages.rbegin(); it != stages.rend(); ++it) {
        const std::string& s = it->first;
        const ConstraintSystem& stage = it->second;
        std::optional<EpsRational> lo, hi;
        bool lo_strict = false, hi_strict = false;
        for (const auto& c : stage.constraints) {
            Rat k = c.lhs.coeff(s);
            if (k == 0) continue;
            // value bound for s given already-assigned later symbols
            LinearForm restf = c.lhs;
            restf.coeffs.erase(s);
            EpsRational rest;
            for (const auto& [sym, kk] : restf.coeffs) rest = rest + kk * point.at(sym);
            EpsRational b = (c.bound - rest) / k;
            if (k > 0) {
                if (!hi || b < *hi) { hi = b; hi_strict = c.strict; }
                else if (b == *hi && c.strict) hi_strict = true;
            } else {
                if (!lo || b > *lo) { lo = b; lo_strict = c.strict; }
                else if (b == *lo && c.strict) lo_strict = true;
            }
        }
        EpsRational v;
        if (lo && hi) {
            if (*lo == *hi) {
                v = *lo;  // projection feasibility guarantees both non-strict
            } else {
                v = (*lo + *hi) / Rat(2);
            }
        } else if (lo) {
            v = *lo + EpsRational(Rat(1));
        } else if (hi) {
            v = *hi - EpsRational(Rat(1));
        }
        point[s] = v;
    }
    return point;
}

// ---------------------------------------------------------------------------
// Entailment with margins, eps-rescaling and witnesses
// ---------------------------------------------------------------------------

enum class Verdict { entailed, entailed_eps_rescaled, refuted };

inline std::string verdict_str(Verdict v) {
    switch (v) {
        case Verdict::entailed: return "entailed";
        case Verdict::entailed_eps_rescaled: return "entailed (eps rescaled)";
        case Verdict::refuted: return "refuted";
    }
    return "?";
}

struct ImpliesOutcome {
    Verdict verdict = Verdict::refuted;
    EpsRational sup;                 // supremum of the substituted lhs
    bool sup_attained = false;
    EpsRational margin;              // bound - sup (meaningful when entailed)
    std::optional<Rat> eps_scale;    // conclusion holds with eps scaled by this factor
    std::optional<std::map<std::string, EpsRational>> witness;
    LinearConstraint substituted;    // conclusion over premise symbols
};

inline LinearConstraint apply_substitution(const LinearConstraint& c, const Substitution& subst) {
    LinearConstraint out;
    out.strict = c.strict;
    out.bound = c.bound;
    for (const auto& [s, k] : c.lhs.coeffs) {
        auto it = subst.map.find(s);
        if (it == subst.map.end()) {
            out.lhs.add(s, k);
        } else {
            out.lhs = out.lhs + k * it->second.form;
            out.bound = out.bound - k * it->second.shift;
        }
    }
    return out;
}

inline ImpliesOutcome implies_one(const ConstraintSystem& premises, const Substitution& subst,
                                  const LinearConstraint& conclusion) {
    ImpliesOutcome out;
    out.substituted = apply_substitution(conclusion, subst);
    premises.require_declared(out.substituted.lhs);

    MaximizeResult mx = maximize(premises, out.substituted.lhs);
    out.sup = mx.sup;
    out.sup_attained = mx.attained;
    const EpsRational& bound = out.substituted.bound;

    auto make_witness = [&](const EpsRational& target, bool strict_above) {
        ConstraintSystem aug = premises;
        LinearConstraint ge;  // -lhs <= -target  (lhs >= target)
        ge.lhs = Rat(-1) * out.substituted.lhs;
        ge.bound = -target;
        ge.strict = strict_above;
        aug.constraints.push_back(ge);
        out.witness = feasible_point(aug);
    };

    int c_cmp = eps_compare(out.sup, bound);
    if (c_cmp < 0) {
        out.verdict = Verdict::entailed;
        out.margin = bound - out.sup;
        return out;
    }
    if (c_cmp == 0) {
        if (!out.substituted.strict || !mx.attained) {
            // boundary contact only through strict premises, or non-strict goal
            out.verdict = Verdict::entailed;
            out.margin = EpsRational();
            return out;
        }
        out.verdict = Verdict::refuted;  // sup attained on a strict conclusion
        make_witness(out.sup, false);
        return out;
    }
    // sup > bound. If only the eps parts disagree, report the rescaling that
    // repairs the chain: the conclusion holds with eps weakened by sup.e/bound.e.
    if (out.sup.c == bound.c && bound.e < 0 && out.sup.e < 0) {
        out.verdict = Verdict::entailed_eps_rescaled;
        out.margin = EpsRational();
        out.eps_scale = out.sup.e / bound.e;  // in (0,1): stated multiple is too demanding
        return out;
    }
    out.verdict = Verdict::refuted;
    EpsRational target = (bound + out.sup) / Rat(2);
    make_witness(target, false);
    return out;
}

inline std::vector<ImpliesOutcome> implies(const ConstraintSystem& premises,
                                           const Substitution& subst,
                                           const ConstraintSystem& conclusions) {
    std::vector<ImpliesOutcome> out;
    out.reserve(conclusions.constraints.size());
    for (const auto& c : conclusions.constraints) out.push_back(implies_one(premises, subst, c));
    return out;
}

}  // namespace aplab
