#include "toricbv/fourier_motzkin.hpp"

#include "toricbv/errors.hpp"

namespace toricbv {

namespace {

// A row with no remaining variables: holds iff 0 >= rhs (or 0 > rhs).
bool trivially_false(const Halfspace& h) {
    for (const auto& c : h.coeffs)
        if (!c.is_zero()) return false;
    return h.strict ? (h.rhs.sign() >= 0) : (h.rhs.sign() > 0);
}

bool has_contradiction(const HalfspaceSystem& sys) {
    for (const auto& h : sys)
        if (trivially_false(h)) return true;
    return false;
}

}  // namespace

HalfspaceSystem fm_eliminate(const HalfspaceSystem& sys, std::size_t var) {
    HalfspaceSystem kept, pos, neg;
    for (const auto& h : sys) {
        if (var >= h.coeffs.size() || h.coeffs[var].is_zero())
            kept.push_back(h);
        else if (h.coeffs[var].sign() > 0)
            pos.push_back(h);
        else
            neg.push_back(h);
    }
    // From  p.x >= pr  (coeff a > 0 on var)  and  n.x >= nr  (coeff b < 0):
    // a*(n.x) - b*(p.x) eliminates var and keeps the inequality direction.
    for (const auto& p : pos) {
        const Rat a = p.coeffs[var];
        for (const auto& n : neg) {
            const Rat b = n.coeffs[var];  // b < 0
            Halfspace combo;
            combo.coeffs.resize(std::max(p.coeffs.size(), n.coeffs.size()));
            for (std::size_t i = 0; i < combo.coeffs.size(); ++i) {
                const Rat pc = i < p.coeffs.size() ? p.coeffs[i] : Rat(0);
                const Rat nc = i < n.coeffs.size() ? n.coeffs[i] : Rat(0);
                combo.coeffs[i] = a * nc - b * pc;
            }
            combo.coeffs[var] = 0;
            combo.rhs = a * n.rhs - b * p.rhs;
            combo.strict = p.strict || n.strict;
            kept.push_back(std::move(combo));
        }
    }
    return kept;
}

VarBounds fm_bounds(const HalfspaceSystem& sys, std::size_t var, std::size_t nvars) {
    HalfspaceSystem cur = sys;
    for (std::size_t v = 0; v < nvars; ++v) {
        if (v == var) continue;
        cur = fm_eliminate(cur, v);
    }
    VarBounds out;
    for (const auto& h : cur) {
        const Rat c = var < h.coeffs.size() ? h.coeffs[var] : Rat(0);
        if (c.is_zero()) {
            if (trivially_false(h)) out.feasible = false;
            continue;
        }
        const Rat bound = h.rhs / c;
        if (c.sign() > 0) {  // x >= bound
            if (!out.lower || bound > *out.lower ||
                (bound == *out.lower && h.strict)) {
                out.lower = bound;
                out.lower_strict = h.strict;
            }
        } else {  // x <= bound
            if (!out.upper || bound < *out.upper ||
                (bound == *out.upper && h.strict)) {
                out.upper = bound;
                out.upper_strict = h.strict;
            }
        }
    }
    if (out.lower && out.upper) {
        if (*out.lower > *out.upper) out.feasible = false;
        if (*out.lower == *out.upper && (out.lower_strict || out.upper_strict))
            out.feasible = false;
    }
    return out;
}

namespace {

std::optional<RatVec> fm_point_rec(const HalfspaceSystem& sys, std::size_t nvars) {
    if (nvars == 0) {
        if (has_contradiction(sys)) return std::nullopt;
        return RatVec{};
    }
    const std::size_t var = nvars - 1;
    const HalfspaceSystem projected = fm_eliminate(sys, var);
    auto prefix = fm_point_rec(projected, nvars - 1);
    if (!prefix) return std::nullopt;

    // Bounds for the eliminated variable at the chosen prefix.
    std::optional<Rat> lower, upper;
    bool lower_strict = false, upper_strict = false;
    for (const auto& h : sys) {
        const Rat c = var < h.coeffs.size() ? h.coeffs[var] : Rat(0);
        if (c.is_zero()) continue;
        Rat rest = h.rhs;
        for (std::size_t i = 0; i < var && i < h.coeffs.size(); ++i)
            rest -= h.coeffs[i] * (*prefix)[i];
        const Rat bound = rest / c;
        if (c.sign() > 0) {
            if (!lower || bound > *lower || (bound == *lower && h.strict)) {
                lower = bound;
                lower_strict = h.strict;
            }
        } else {
            if (!upper || bound < *upper || (bound == *upper && h.strict)) {
                upper = bound;
                upper_strict = h.strict;
            }
        }
    }

    Rat value;
    if (lower && upper) {
        if (*lower > *upper) return std::nullopt;
        if (*lower == *upper) {
            if (lower_strict || upper_strict) return std::nullopt;
            value = *lower;
        } else {
            value = (*lower + *upper) / Rat(2);
        }
    } else if (lower) {
        value = lower_strict ? *lower + Rat(1) : *lower;
    } else if (upper) {
        value = upper_strict ? *upper - Rat(1) : *upper;
    } else {
        value = 0;
    }

    prefix->push_back(value);
    return prefix;
}

}  // namespace

std::optional<RatVec> fm_point(const HalfspaceSystem& sys, std::size_t nvars) {
    for (const auto& h : sys)
        if (h.coeffs.size() > nvars)
            throw input_error("fm_point: constraint wider than variable count");
    return fm_point_rec(sys, nvars);
}

}  // namespace toricbv
