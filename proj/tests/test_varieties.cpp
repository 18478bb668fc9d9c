// Cross-checks on three-dimensional fans beyond the bundled corpus. The
// expected dimensions come from independent routes: products of varieties
// multiply graded pieces (a convolution of the dimension vectors), and
// blow-ups have classical automorphism-group dimensions.

#include <doctest.h>

#include "toricbv/bv.hpp"
#include "toricbv/corpus.hpp"
#include "toricbv/oracles.hpp"

using namespace toricbv;

TEST_SUITE_BEGIN("varieties");

namespace {

// the triple product of lines: all eight octants over the rays +-e_i
Fan p1_cubed() {
    std::vector<LatticeVector> rays = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0},
                                       {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
    std::vector<std::vector<int>> cones;
    for (int sx = 0; sx < 2; ++sx)
        for (int sy = 0; sy < 2; ++sy)
            for (int sz = 0; sz < 2; ++sz) cones.push_back({sx, 2 + sy, 4 + sz});
    return Fan(3, std::move(rays), std::move(cones));
}

// the plane times a line
Fan p2_times_p1() {
    std::vector<LatticeVector> rays = {{1, 0, 0},  {0, 1, 0}, {-1, -1, 0},
                                       {0, 0, 1},  {0, 0, -1}};
    std::vector<std::vector<int>> cones;
    for (const auto& base : {std::vector<int>{0, 1}, {1, 2}, {2, 0}}) {
        cones.push_back({base[0], base[1], 3});
        cones.push_back({base[0], base[1], 4});
    }
    return Fan(3, std::move(rays), std::move(cones));
}

// projective 3-space blown up at one torus-fixed point
Fan blowup_p3() {
    std::vector<LatticeVector> rays = {
        {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}, {1, 1, 1}};
    std::vector<std::vector<int>> cones = {{1, 2, 4}, {0, 2, 4}, {0, 1, 4},
                                           {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
    return Fan(3, std::move(rays), std::move(cones));
}

std::vector<std::size_t> convolve(const std::vector<std::size_t>& a,
                                  const std::vector<std::size_t>& b) {
    std::vector<std::size_t> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

}  // namespace

TEST_CASE("product fans multiply the graded dimensions") {
    const auto p1_dims = Variety::analyze(corpus::find("p1")->fan).degree_dims();
    const auto p2_dims = Variety::analyze(corpus::find("p2")->fan).degree_dims();

    const Variety cube = Variety::analyze(p1_cubed());
    CHECK(cube.report.valid());
    CHECK(cube.degree_dims() == convolve(convolve(p1_dims, p1_dims), p1_dims));
    CHECK(cube.degree_dims() == std::vector<std::size_t>{1, 9, 27, 27});

    const Variety mixed = Variety::analyze(p2_times_p1());
    CHECK(mixed.report.valid());
    CHECK(mixed.degree_dims() == convolve(p2_dims, p1_dims));
    CHECK(mixed.degree_dims() == std::vector<std::size_t>{1, 11, 34, 30});
}

TEST_CASE("blow-up of projective 3-space at a point") {
    const Variety v = Variety::analyze(blowup_p3());
    CHECK(v.report.valid());
    // degree 1 is the stabilizer of a point in the automorphism group: 15 - 3
    CHECK(v.basis.dim(1) == 12);
    // the exceptional constraint removes four of the 35 simplex points
    CHECK(v.points.size() == 31);
    CHECK(v.basis.dim(3) == 31);
}

TEST_CASE("no generating operator on the extra threefolds") {
    for (const Fan& fan : {p1_cubed(), p2_times_p1(), blowup_p3()}) {
        const Variety v = Variety::analyze(fan);
        CHECK(!existence(v).exists);
    }
}

TEST_CASE("lattice point oracle agrees on the extra threefolds") {
    for (const Fan& fan : {p1_cubed(), p2_times_p1(), blowup_p3()}) {
        const Variety v = Variety::analyze(fan);
        std::vector<Weight> fast;
        for (const auto& rec : v.points) fast.push_back(rec.point);
        CHECK(oracle_lattice_points(v.polytope) == fast);
    }
}

TEST_CASE("closure and axioms hold on the blown-up 3-space") {
    const Variety v = Variety::analyze(blowup_p3());
    const AlgebraTables tables = build_tables(v);  // membership-checked internally
    AxiomBudget budget;
    budget.samples = 500;
    for (const auto& report : oracle_axioms(tables, nullptr, budget)) {
        CAPTURE(report.name);
        CAPTURE(report.counterexample);
        CHECK(report.pass);
    }
}

TEST_SUITE_END();
