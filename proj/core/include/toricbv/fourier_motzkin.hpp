#pragma once

#include <optional>
#include <vector>

#include "toricbv/rational.hpp"

namespace toricbv {

// One linear inequality  coeffs . x >= rhs  (or strict > when `strict`).
struct Halfspace {
    RatVec coeffs;
    Rat rhs;
    bool strict = false;
};

using HalfspaceSystem = std::vector<Halfspace>;

// Projects the system onto the coordinates != var by eliminating `var`.
// Exact for mixed strict/weak systems over the rationals.
HalfspaceSystem fm_eliminate(const HalfspaceSystem& sys, std::size_t var);

struct VarBounds {
    bool feasible = true;
    std::optional<Rat> lower, upper;
    bool lower_strict = false, upper_strict = false;
};

// Bounds of coordinate `var` over the solution set, obtained by eliminating
// every other variable. Missing bound means unbounded on that side.
VarBounds fm_bounds(const HalfspaceSystem& sys, std::size_t var, std::size_t nvars);

// A feasible point, found by elimination and back-substitution; nothing when
// the system is infeasible.
std::optional<RatVec> fm_point(const HalfspaceSystem& sys, std::size_t nvars);

}  // namespace toricbv
