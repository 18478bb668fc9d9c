#pragma once

#include <map>
#include <vector>

#include "toricbv/fan.hpp"
#include "toricbv/matrix.hpp"

namespace toricbv {

// The polytope { I in M_R : <I, e_t> >= -1 for every ray e_t }, kept as the
// raw halfspace data. Bounds other than -1 are allowed so tests can build
// arbitrary rational polytopes through the same machinery.
struct WeightPolytope {
    int dim = 0;
    std::vector<LatticeVector> normals;  // constraint row t: <I, normals[t]> >= bounds[t]
    RatVec bounds;
};

// One lattice point I of the weight polytope together with its tight
// constraint data: the active rays, their span rank (the stratum), and an
// echelon basis of the span (the normal space of the face through I).
struct LatticePointRecord {
    Weight point;
    std::vector<std::size_t> active;      // indices of rays tight at the point
    int stratum = 0;                      // rank of the active rays
    std::vector<RatVec> normal_basis;     // echelon basis of their span in N_Q
};

// Linear system over delta in M_Q: rows <delta, e> = -1 for tight rays e.
struct LinearSystem {
    RatMatrix lhs;
    RatVec rhs;
};

// Builds the weight polytope of a validated fan. Rejects fans that fail the
// smoothness or completeness hypotheses.
WeightPolytope build_polytope(const Fan& fan);
WeightPolytope build_polytope(const Fan& fan, const FanReport& report);

// All lattice points of the polytope in lexicographic order, each with its
// active set, stratum, and normal basis. Throws input_error with a witness
// direction when the feasible region is unbounded.
std::vector<LatticePointRecord> lattice_points(const WeightPolytope& p);

// stratum -> number of points in it; a partition of the point set.
std::map<int, std::size_t> stratum_counts(const std::vector<LatticePointRecord>& points);

// The affine-hull constraints on delta coming from one record:
// <delta, e> = -1 per active ray e (empty system when none are active).
LinearSystem affine_hull_constraints(const LatticePointRecord& rec, const WeightPolytope& p);

// Points whose active rays span the full dimension.
std::vector<LatticePointRecord> lattice_vertices(const std::vector<LatticePointRecord>& points);

}  // namespace toricbv
