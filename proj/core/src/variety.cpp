#include "toricbv/variety.hpp"

namespace toricbv {

Variety Variety::analyze(const Fan& fan) {
    Variety v;
    v.fan = fan;
    v.report = validate(fan);
    v.polytope = build_polytope(fan, v.report);
    v.points = lattice_points(v.polytope);
    v.basis = GradedBasis(v.points, fan.dim);
    return v;
}

std::vector<std::size_t> Variety::degree_dims() const {
    std::vector<std::size_t> dims(fan.dim + 1);
    for (int k = 0; k <= fan.dim; ++k) dims[k] = basis.dim(k);
    return dims;
}

}  // namespace toricbv
