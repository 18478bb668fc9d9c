#pragma once

#include <string>
#include <vector>

#include "toricbv/exterior.hpp"
#include "toricbv/matrix.hpp"

namespace toricbv {

// A fan in N_R given by its primitive ray generators and its maximal cones
// (as sets of ray indices, n rays per cone). Construction checks structural
// well-formedness only; the mathematical hypotheses are computed by validate().
struct Fan {
    int dim = 0;
    std::vector<LatticeVector> rays;
    std::vector<std::vector<int>> max_cones;

    Fan() = default;
    Fan(int n, std::vector<LatticeVector> rays_, std::vector<std::vector<int>> cones_);

    std::size_t ray_count() const { return rays.size(); }
    // Generator matrix of a maximal cone: columns are its rays.
    RatMatrix cone_matrix(std::size_t cone) const;
};

struct FanReport {
    bool primitive = false;
    bool simplicial_smooth = false;
    bool complete = false;
    std::vector<std::string> messages;

    bool valid() const { return primitive && simplicial_smooth && complete; }
};

// Checks the standing hypotheses a fan must satisfy here:
//   primitive         every ray generator has coordinate gcd 1
//   simplicial_smooth every maximal cone matrix has determinant +-1
//   complete          wall pairing (each spanning (n-1)-subset of a maximal
//                     cone lies in exactly two of them), wall-connectivity,
//                     and pairwise disjoint cone interiors
// The three flags are computed independently; messages carry diagnostics.
FanReport validate(const Fan& fan);

// Number of k-dimensional cones, counting faces of the maximal cones.
std::size_t cone_count(const Fan& fan, int k);

}  // namespace toricbv
