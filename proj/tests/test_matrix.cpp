#include <doctest.h>

#include "toricbv/matrix.hpp"

using namespace toricbv;

TEST_SUITE_BEGIN("matrix");

TEST_CASE("rational parsing and canonical form") {
    CHECK(Rat::parse("3/6") == Rat(1, 2));
    CHECK(Rat::parse("-4/2") == Rat(-2));
    CHECK(Rat(2, -4) == Rat(-1, 2));
    CHECK(Rat(2, -4).den() == 2);  // denominator kept positive
    CHECK(Rat(7, 3).floor() == 2);
    CHECK(Rat(7, 3).ceil() == 3);
    CHECK(Rat(-7, 3).floor() == -3);
    CHECK(Rat(-7, 3).ceil() == -2);
    CHECK_THROWS_AS(Rat(1, 0), input_error);
    CHECK_THROWS_AS(Rat(1) / Rat(0), input_error);
    CHECK_THROWS_AS(Rat::parse("abc"), input_error);
}

TEST_CASE("rref of the identity is itself") {
    const auto m = RatMatrix::identity(2);
    const auto [red, pivots] = rref(m);
    CHECK(red == m);
    CHECK(pivots == std::vector<std::size_t>{0, 1});
}

TEST_CASE("rref of the zero matrix has no pivots") {
    const RatMatrix m(2, 2);
    const auto [red, pivots] = rref(m);
    CHECK(red == m);
    CHECK(pivots.empty());
}

TEST_CASE("rref of a rank-1 matrix") {
    // hand row-reduction: [[2,4],[1,2]] -> [[1,2],[0,0]]
    const RatMatrix m{{Rat(2), Rat(4)}, {Rat(1), Rat(2)}};
    const auto [red, pivots] = rref(m);
    CHECK(red == RatMatrix{{Rat(1), Rat(2)}, {Rat(0), Rat(0)}});
    CHECK(pivots == std::vector<std::size_t>{0});
}

TEST_CASE("rref is idempotent") {
    const RatMatrix m{{Rat(2), Rat(4), Rat(1)}, {Rat(1), Rat(2), Rat(0)}, {Rat(0), Rat(3), Rat(5)}};
    const auto once = rref(m);
    const auto twice = rref(once.reduced);
    CHECK(once.reduced == twice.reduced);
    CHECK(once.pivots == twice.pivots);
}

TEST_CASE("kernel of a full-rank matrix is empty") {
    CHECK(kernel_basis(RatMatrix::identity(3)).empty());
}

TEST_CASE("kernel of the zero map is everything") {
    const RatMatrix m(1, 3);
    CHECK(kernel_basis(m).size() == 3);
}

TEST_CASE("kernel of [[1,1]] is spanned by (1,-1)") {
    const RatMatrix m{{Rat(1), Rat(1)}};
    const auto basis = kernel_basis(m);
    REQUIRE(basis.size() == 1);
    // direct substitution: m v = 0 and v is proportional to (1,-1)
    CHECK(basis[0][0] + basis[0][1] == Rat(0));
    CHECK(basis[0][0] * Rat(-1) == basis[0][1]);
}

TEST_CASE("kernel vectors always satisfy m v = 0, rank-nullity holds") {
    const RatMatrix m{{Rat(1), Rat(2), Rat(3)}, {Rat(2), Rat(4), Rat(6)}, {Rat(0), Rat(1), Rat(1)}};
    const auto basis = kernel_basis(m);
    CHECK(rank(m) + basis.size() == m.cols());
    for (const auto& v : basis) {
        for (const auto& entry : matvec(m, v)) CHECK(entry == Rat(0));
    }
}

TEST_CASE("solve against the identity returns the rhs") {
    const auto sol = solve_affine(RatMatrix::identity(2), {Rat(5), Rat(-7, 3)});
    REQUIRE(sol.has_value());
    CHECK(sol->particular == RatVec{Rat(5), Rat(-7, 3)});
    CHECK(sol->kernel.empty());
}

TEST_CASE("inconsistent system has no solution") {
    // x = -1 and -x = -1 cannot both hold
    const RatMatrix m{{Rat(1)}, {Rat(-1)}};
    CHECK(!solve_affine(m, {Rat(-1), Rat(-1)}).has_value());
}

TEST_CASE("empty system over two unknowns is unconstrained") {
    const RatMatrix m(0, 2);
    const auto sol = solve_affine(m, {});
    REQUIRE(sol.has_value());
    CHECK(sol->particular == RatVec{Rat(0), Rat(0)});
    CHECK(sol->kernel.size() == 2);
}

TEST_CASE("solve_affine agrees with brute-force rank comparison") {
    // consistency iff rank(m) == rank(m|b), checked on a small family
    const std::vector<RatMatrix> mats = {
        RatMatrix{{Rat(1), Rat(2)}, {Rat(2), Rat(4)}},
        RatMatrix{{Rat(1), Rat(0)}, {Rat(0), Rat(1)}},
        RatMatrix{{Rat(1), Rat(1)}, {Rat(1), Rat(1)}},
    };
    const std::vector<RatVec> rhss = {{Rat(1), Rat(2)}, {Rat(1), Rat(3)}, {Rat(0), Rat(0)}};
    for (const auto& m : mats) {
        for (const auto& b : rhss) {
            RatMatrix aug(m.rows(), m.cols() + 1);
            for (std::size_t r = 0; r < m.rows(); ++r) {
                for (std::size_t c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
                aug.at(r, m.cols()) = b[r];
            }
            const bool consistent = rank(m) == rank(aug);
            const auto sol = solve_affine(m, b);
            CHECK(sol.has_value() == consistent);
            if (sol) {
                const auto residual = matvec(m, sol->particular);
                for (std::size_t r = 0; r < b.size(); ++r) CHECK(residual[r] == b[r]);
            }
        }
    }
}

TEST_CASE("solve_affine rejects mismatched rhs") {
    CHECK_THROWS_AS(solve_affine(RatMatrix::identity(2), {Rat(1)}), input_error);
}

TEST_CASE("determinant and inverse") {
    const RatMatrix m{{Rat(2), Rat(1)}, {Rat(1), Rat(1)}};
    CHECK(determinant(m) == Rat(1));
    const auto inv = inverse(m);
    REQUIRE(inv.has_value());
    CHECK(matmul(m, *inv) == RatMatrix::identity(2));

    const RatMatrix singular{{Rat(1), Rat(2)}, {Rat(2), Rat(4)}};
    CHECK(determinant(singular) == Rat(0));
    CHECK(!inverse(singular).has_value());
}

TEST_SUITE_END();
