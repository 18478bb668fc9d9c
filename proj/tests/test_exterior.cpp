#include <doctest.h>

#include "toricbv/exterior.hpp"
#include "toricbv/matrix.hpp"
#include "toricbv/prng.hpp"

using namespace toricbv;

TEST_SUITE_BEGIN("exterior");

namespace {

// every basis multivector of every degree for small n
std::vector<Multivector> all_basis_multivectors(int n) {
    std::vector<Multivector> out;
    for (int k = 0; k <= n; ++k)
        for (const auto& t : index_tuples(n, k)) out.push_back(Multivector::basis(t));
    return out;
}

CharacterVector dual_basis_vector(int n, int i) {
    CharacterVector alpha(n);
    alpha[i] = 1;
    return alpha;
}

Multivector random_multivector(int n, int k, SplitMix64& rng) {
    Multivector m(k);
    for (const auto& t : index_tuples(n, k)) m.add_term(t, Rat(rng.range(-3, 3)));
    return m;
}

}  // namespace

TEST_CASE("pairing") {
    CHECK(pairing(CharacterVector{Rat(1), Rat(0)}, LatticeVector{0, 1}) == Rat(0));
    CHECK(pairing(CharacterVector{Rat(1), Rat(1)}, LatticeVector{2, -1}) == Rat(1));
    CHECK(pairing(CharacterVector{Rat(0), Rat(0)}, LatticeVector{5, -3}) == Rat(0));
    CHECK_THROWS_AS(pairing(CharacterVector{Rat(1)}, LatticeVector{0, 1}), input_error);
}

TEST_CASE("wedge on basis elements") {
    const auto e1 = Multivector::basis({0});
    const auto e2 = Multivector::basis({1});
    const auto e12 = wedge(e1, e2);
    CHECK(e12.degree() == 2);
    CHECK(e12.coefficient({0, 1}) == Rat(1));
    CHECK(wedge(e1, e1).is_zero());
    CHECK(wedge(e2, e1) == -e12);
}

TEST_CASE("contraction on basis elements") {
    const auto e12 = Multivector::basis({0, 1});
    CHECK(contract(dual_basis_vector(2, 0), e12) == Multivector::basis({1}));
    CHECK(contract(dual_basis_vector(2, 0), Multivector::scalar(Rat(3))).is_zero());
    // anti-derivation expansion: i_(1,1) (e1^e2) = e2 - e1
    const auto r = contract(CharacterVector{Rat(1), Rat(1)}, e12);
    CHECK(r == Multivector::basis({1}) - Multivector::basis({0}));
}

TEST_CASE("contraction drops degree by one and vanishes on scalars") {
    const auto a = Multivector::basis({0, 2});
    CHECK(contract(dual_basis_vector(3, 0), a).degree() == 1);
    CHECK(contract(dual_basis_vector(3, 1), Multivector::scalar(Rat(1))).is_zero());
}

TEST_CASE("anti-derivation law, exhaustive for n <= 4") {
    for (int n = 1; n <= 4; ++n) {
        const auto basis = all_basis_multivectors(n);
        for (int i = 0; i < n; ++i) {
            const auto alpha = dual_basis_vector(n, i);
            for (const auto& a : basis) {
                for (const auto& b : basis) {
                    const Multivector lhs = contract(alpha, wedge(a, b));
                    Multivector rhs = wedge(contract(alpha, a), b);
                    Multivector second = wedge(a, contract(alpha, b));
                    if (a.degree() % 2 == 1) second *= Rat(-1);
                    rhs += second;
                    CHECK(lhs == rhs);
                }
            }
        }
    }
}

TEST_CASE("contractions anticommute on random multivectors") {
    SplitMix64 rng(2024);
    for (int n = 2; n <= 4; ++n) {
        for (int trial = 0; trial < 25; ++trial) {
            CharacterVector alpha(n), beta(n);
            for (int i = 0; i < n; ++i) {
                alpha[i] = Rat(rng.range(-3, 3));
                beta[i] = Rat(rng.range(-3, 3));
            }
            for (int k = 2; k <= n; ++k) {
                const Multivector a = random_multivector(n, k, rng);
                const Multivector lhs =
                    contract(alpha, contract(beta, a)) + contract(beta, contract(alpha, a));
                CHECK(lhs.is_zero());
            }
        }
    }
}

TEST_CASE("double contraction by the same covector vanishes") {
    SplitMix64 rng(7);
    for (int n = 2; n <= 4; ++n) {
        CharacterVector alpha(n);
        for (int i = 0; i < n; ++i) alpha[i] = Rat(rng.range(-5, 5));
        for (int k = 2; k <= n; ++k) {
            const Multivector a = random_multivector(n, k, rng);
            CHECK(contract(alpha, contract(alpha, a)).is_zero());
        }
    }
}

TEST_CASE("graded commutativity of wedge on all basis pairs, n <= 4") {
    for (int n = 1; n <= 4; ++n) {
        const auto basis = all_basis_multivectors(n);
        for (const auto& a : basis) {
            for (const auto& b : basis) {
                Multivector flipped = wedge(b, a);
                if ((a.degree() * b.degree()) % 2 == 1) flipped *= Rat(-1);
                CHECK(wedge(a, b) == flipped);
            }
        }
    }
}

TEST_CASE("contraction detects annihilators of decomposable multivectors") {
    // F = span{e1}: contraction by the dual of e2 kills e1, the dual of e1 does not
    const auto e1 = Multivector::basis({0});
    CHECK(contract(dual_basis_vector(2, 1), e1).is_zero());
    CHECK(!contract(dual_basis_vector(2, 0), e1).is_zero());

    // F = span{(1,1,0),(0,1,1)}: alpha annihilates F iff it kills the wedge
    const auto f1 = Multivector::from_vector(RatVec{Rat(1), Rat(1), Rat(0)});
    const auto f2 = Multivector::from_vector(RatVec{Rat(0), Rat(1), Rat(1)});
    const auto vol = wedge(f1, f2);
    const CharacterVector annihilator{Rat(1), Rat(-1), Rat(1)};  // orthogonal to both
    const CharacterVector generic{Rat(1), Rat(0), Rat(0)};
    CHECK(contract(annihilator, vol).is_zero());
    CHECK(!contract(generic, vol).is_zero());
}

TEST_CASE("index tuple enumeration is lexicographic and complete") {
    const auto tuples = index_tuples(4, 2);
    CHECK(tuples.size() == 6);
    CHECK(tuples.front() == IndexTuple{0, 1});
    CHECK(tuples.back() == IndexTuple{2, 3});
    CHECK(index_tuples(3, 0).size() == 1);
    CHECK(index_tuples(3, 4).empty());
}

TEST_CASE("multivector printing") {
    const auto e12 = Multivector::basis({0, 1});
    CHECK(e12.str() == "e1^e2");
    CHECK((Rat(-2) * e12).str() == "-2 e1^e2");
    CHECK(Multivector(1).str() == "0");
    CHECK(Multivector::scalar(Rat(1, 2)).str() == "1/2");
}

TEST_SUITE_END();
