#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "toricbv/algebra.hpp"
#include "toricbv/variety.hpp"

namespace toricbv {

// Solution of the existence system: one row <delta, e> = -1 per ray that is
// tight at some lattice point of the weight polytope, deduplicated.
struct BVSolution {
    std::vector<std::size_t> active_rays;  // sorted ray indices
    RatMatrix system;
    RatVec rhs;
    bool exists = false;
    RatVec delta_particular;               // valid when exists
    std::vector<RatVec> delta_kernel;      // direction space of the solution set

    std::size_t solution_dim() const { return exists ? delta_kernel.size() : 0; }
};

BVSolution existence(const Variety& variety);

// The operator D(chi^I . A) = chi^I . (i_{delta - I} A) as one matrix per
// degree in the graded-basis coordinates. Weight blocks are preserved, so
// the matrices are block diagonal across weights; degree 0 maps to zero.
struct BVOperator {
    RatVec delta;
    std::vector<RatMatrix> matrices;  // matrices[k] : degree k -> degree k-1, k in [1, n]

    const RatMatrix& matrix(int k) const { return matrices[k - 1]; }
};

// Checks <delta, e> = -1 for every active ray; returns a violated ray index
// when delta is inadmissible.
std::optional<std::size_t> admissibility_violation(const RatVec& delta,
                                                   const Variety& variety);

// Builds the operator for an admissible delta; throws input_error naming the
// violated ray otherwise. Every image is re-checked against its weight block.
BVOperator build_operator(const RatVec& delta, const Variety& variety);

// Applies per-degree matrices to an element of the field algebra (the
// element must lie in the algebra, i.e. have graded-basis coordinates).
WeightedPolyvector apply_operator(const std::vector<RatMatrix>& matrices,
                                  const Variety& variety, const WeightedPolyvector& a);
WeightedPolyvector apply_operator(const BVOperator& op, const Variety& variety,
                                  const WeightedPolyvector& a);

// Direct verification of the operator identities: squares to zero, generates
// the bracket on basis pairs, and satisfies the second-order product rule on
// basis triples. Triples are exhaustive up to `exhaustive_limit` total basis
// dimension, and seeded-random samples beyond it.
struct OperatorVerification {
    bool d_squared_zero = false;
    std::size_t pairs_checked = 0;
    std::size_t triples_checked = 0;
    std::vector<std::string> violations;  // capped descriptions
    std::size_t violation_count = 0;

    bool ok() const { return d_squared_zero && violation_count == 0; }
};

struct CheckBudget {
    std::size_t exhaustive_limit = 40;
    std::size_t samples = 1000;
    std::uint64_t seed = 1;
};

OperatorVerification verify_operator(const BVOperator& op, const Variety& variety,
                                     const CheckBudget& budget = {});

// The torus-algebra operator D(chi^I . A) = -chi^I . (i_I A).
WeightedPolyvector torus_bv(const WeightedPolyvector& a);

// Recovers delta from a candidate family of per-degree matrices and returns
// it iff the candidate is exactly the operator built from that delta.
std::optional<RatVec> classify_form(const std::vector<RatMatrix>& matrices,
                                    const Variety& variety);

}  // namespace toricbv
