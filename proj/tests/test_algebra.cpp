#include <doctest.h>

#include "toricbv/algebra.hpp"
#include "toricbv/corpus.hpp"
#include "toricbv/variety.hpp"

using namespace toricbv;

TEST_SUITE_BEGIN("algebra");

namespace {

Weight w(std::initializer_list<long> coords) {
    Weight out;
    for (long c : coords) out.push_back(Int(c));
    return out;
}

WeightedPolyvector mono(const Weight& I, const Multivector& a) {
    return WeightedPolyvector::monomial(Variant::field, I, a);
}

std::vector<WeightedPolyvector> basis_elements(const Variety& v) {
    std::vector<WeightedPolyvector> out;
    for (int k = 0; k <= v.fan.dim; ++k)
        for (const auto& e : v.basis.entries(k)) out.push_back(mono(e.point, e.multivector));
    return out;
}

Rat sign_pow(long e) { return ((e % 2 + 2) % 2 == 0) ? Rat(1) : Rat(-1); }

}  // namespace

TEST_CASE("product of weighted fields") {
    const auto a = mono(w({-1, 0}), Multivector::basis({0}));
    const auto b = mono(w({0, -1}), Multivector::basis({1}));
    const auto ab = wedge_fields(a, b);
    REQUIRE(ab.terms().size() == 1);
    CHECK(ab.terms().begin()->first == w({-1, -1}));
    CHECK(ab.terms().begin()->second == Multivector::basis({0, 1}));

    // the product lands in the predicted weight block
    const Variety v = Variety::analyze(corpus::find("p2")->fan);
    CHECK(membership(v.basis, w({-1, -1}), ab.terms().begin()->second, 2));

    // unit and nilpotence
    const auto unit = mono(w({0, 0}), Multivector::scalar(Rat(1)));
    CHECK(wedge_fields(unit, b) == b);
    CHECK(wedge_fields(a, mono(w({1, 1}), Multivector::basis({0}))).is_zero());
}

TEST_CASE("bracket against a generator field multiplies by the weight pairing") {
    // [rho(x), chi^I rho(A)] = <I, x> chi^I rho(A)
    const Variety v = Variety::analyze(corpus::find("p2")->fan);
    for (int j = 0; j < 2; ++j) {
        const auto x = mono(w({0, 0}), Multivector::basis({j}));
        for (int k = 0; k <= 2; ++k) {
            for (const auto& e : v.basis.entries(k)) {
                const auto b = mono(e.point, e.multivector);
                const Rat factor = pairing(e.point, LatticeVector{j == 0 ? 1 : 0, j == 1 ? 1 : 0});
                CHECK(schouten(x, b) == factor * b);
            }
        }
    }
}

TEST_CASE("bracket on the projective line matches the coordinate computation") {
    // [z^2 d_z, d_z] = -2 z d_z translates to [chi^1 e, chi^-1 e] = -2 chi^0 e
    const auto a = mono(w({1}), Multivector::basis({0}));
    const auto b = mono(w({-1}), Multivector::basis({0}));
    const auto expected = Rat(-2) * mono(w({0}), Multivector::basis({0}));
    CHECK(schouten(a, b) == expected);
}

TEST_CASE("weight-zero brackets vanish") {
    const auto a = mono(w({0, 0}), Multivector::basis({0, 1}));
    const auto b = mono(w({0, 0}), Multivector::basis({0}));
    CHECK(schouten(a, b).is_zero());
    CHECK(schouten(b, b).is_zero());
}

TEST_CASE("brackets with degree-0 constants vanish") {
    const auto c = mono(w({0, 0}), Multivector::scalar(Rat(5)));
    const auto b = mono(w({-1, 0}), Multivector::basis({0}));
    CHECK(schouten(c, b).is_zero());
    CHECK(schouten(b, c).is_zero());
}

TEST_CASE("closure on all basis pairs of the projective plane") {
    const Variety v = Variety::analyze(corpus::find("p2")->fan);
    const auto basis = basis_elements(v);
    for (const auto& a : basis) {
        for (const auto& b : basis) {
            const auto prod = wedge_fields(a, b);
            for (const auto& [I, A] : prod.terms())
                CHECK(membership(v.basis, I, A, a.degree() + b.degree()));
            const auto brak = schouten(a, b);
            for (const auto& [I, A] : brak.terms())
                CHECK(membership(v.basis, I, A, a.degree() + b.degree() - 1));
        }
    }
}

TEST_CASE("graded antisymmetry on all basis pairs") {
    for (const std::string name : {"p1", "p2", "dp6"}) {
        const Variety v = Variety::analyze(corpus::find(name)->fan);
        const auto basis = basis_elements(v);
        for (const auto& a : basis)
            for (const auto& b : basis)
                CHECK(schouten(a, b) ==
                      -sign_pow(long(a.degree() - 1) * (b.degree() - 1)) * schouten(b, a));
    }
}

TEST_CASE("graded commutativity of the product on all basis pairs") {
    const Variety v = Variety::analyze(corpus::find("p1xp1")->fan);
    const auto basis = basis_elements(v);
    for (const auto& a : basis)
        for (const auto& b : basis)
            CHECK(wedge_fields(a, b) ==
                  sign_pow(long(a.degree()) * b.degree()) * wedge_fields(b, a));
}

TEST_CASE("graded Jacobi identity, exhaustive on the projective line") {
    const Variety v = Variety::analyze(corpus::find("p1")->fan);
    const auto basis = basis_elements(v);
    for (const auto& a : basis) {
        for (const auto& b : basis) {
            for (const auto& c : basis) {
                const long ka = a.degree(), kb = b.degree(), kc = c.degree();
                WeightedPolyvector sum =
                    sign_pow((ka - 1) * (kc - 1)) * schouten(schouten(a, b), c);
                sum += sign_pow((kb - 1) * (ka - 1)) * schouten(schouten(b, c), a);
                sum += sign_pow((kc - 1) * (kb - 1)) * schouten(schouten(c, a), b);
                CHECK(sum.is_zero());
            }
        }
    }
}

TEST_CASE("Leibniz rule, exhaustive on the projective line and del Pezzo") {
    for (const std::string name : {"p1", "dp6"}) {
        const Variety v = Variety::analyze(corpus::find(name)->fan);
        const auto basis = basis_elements(v);
        for (const auto& a : basis) {
            for (const auto& b : basis) {
                for (const auto& c : basis) {
                    const WeightedPolyvector lhs = schouten(a, wedge_fields(b, c));
                    WeightedPolyvector rhs = wedge_fields(schouten(a, b), c);
                    rhs += sign_pow(long(a.degree() - 1) * b.degree()) *
                           wedge_fields(b, schouten(a, c));
                    CHECK(lhs == rhs);
                }
            }
        }
    }
}

TEST_CASE("embedding into the torus algebra") {
    const auto a = mono(w({-1, 0}), Multivector::basis({0}));
    const auto ta = gamma_embed(a);
    CHECK(ta.variant() == Variant::torus);
    CHECK(ta.terms() == a.terms());
    CHECK(gamma_embed(WeightedPolyvector(Variant::field, 1)).is_zero());
    CHECK_THROWS_AS(gamma_embed(ta), input_error);

    // the embedding respects both operations on all basis pairs
    const Variety v = Variety::analyze(corpus::find("p2")->fan);
    const auto basis = basis_elements(v);
    for (const auto& x : basis) {
        for (const auto& y : basis) {
            CHECK(gamma_embed(wedge_fields(x, y)) ==
                  wedge_fields(gamma_embed(x), gamma_embed(y)));
            CHECK(gamma_embed(schouten(x, y)) == schouten(gamma_embed(x), gamma_embed(y)));
        }
    }
}

TEST_CASE("variant mismatch is rejected") {
    const auto a = mono(w({0, 0}), Multivector::basis({0}));
    const auto t = gamma_embed(a);
    CHECK_THROWS_AS(wedge_fields(a, t), input_error);
    CHECK_THROWS_AS(schouten(a, t), input_error);
}

TEST_CASE("torus elements allow weights outside any polytope") {
    const auto a = WeightedPolyvector::monomial(Variant::torus, w({7, -9}),
                                                Multivector::basis({0}));
    const auto b = WeightedPolyvector::monomial(Variant::torus, w({-7, 9}),
                                                Multivector::basis({1}));
    const auto ab = wedge_fields(a, b);
    REQUIRE(ab.terms().size() == 1);
    CHECK(ab.terms().begin()->first == w({0, 0}));
}

TEST_SUITE_END();
