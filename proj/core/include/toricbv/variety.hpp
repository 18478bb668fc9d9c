#pragma once

#include "toricbv/blocks.hpp"
#include "toricbv/fan.hpp"
#include "toricbv/polytope.hpp"

namespace toricbv {

// Everything derived from one fan: validation report, weight polytope,
// lattice-point records, and the graded basis of the polyvector algebra.
struct Variety {
    Fan fan;
    FanReport report;
    WeightPolytope polytope;
    std::vector<LatticePointRecord> points;
    GradedBasis basis;

    // Validates the fan and computes the derived data; throws input_error
    // when the fan fails the smooth/complete hypotheses.
    static Variety analyze(const Fan& fan);

    std::vector<std::size_t> degree_dims() const;
};

}  // namespace toricbv
