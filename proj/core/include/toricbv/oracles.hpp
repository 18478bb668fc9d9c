#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "toricbv/bv.hpp"
#include "toricbv/variety.hpp"

namespace toricbv {

// Outcome of one brute-force check. Deterministic for a fixed seed; the
// first counterexample is kept verbatim for reports.
struct OracleReport {
    std::string name;
    std::string instance;
    bool pass = true;
    std::size_t checked = 0;
    std::string counterexample;

    void fail(const std::string& witness) {
        if (pass) counterexample = witness;
        pass = false;
    }
};

// Lattice points by an independent route: bounding box from brute-force
// vertex enumeration (all n-subsets of constraints), then direct filtering.
// Restricted to n <= 3 to keep the subset enumeration honest and small.
std::vector<Weight> oracle_lattice_points(const WeightPolytope& p);

// Seeded random subspaces F with A = wedge of an echelon basis of F:
// checks   contract(alpha, A) = 0  <=>  alpha annihilates F
// for both random covectors and covectors built from the annihilator.
OracleReport oracle_contraction_lemma(int n, std::size_t trials, std::uint64_t seed);

// Multiplication/bracket tables over the graded basis, with coordinates in
// the same basis. The tables are what the axiom oracle consumes, so tests
// can corrupt a copy to prove the oracle notices.
struct AlgebraTables {
    struct Elem {
        int degree = 0;                                // degree tag of the value
        std::vector<std::pair<std::size_t, Rat>> coords;  // sparse, per-degree indices

        bool is_zero() const { return coords.empty(); }
    };

    int n = 0;
    std::vector<std::size_t> dims;          // per degree 0..n
    std::vector<Elem> product;              // [g1 * total + g2]
    std::vector<Elem> bracket;              // [g1 * total + g2]
    std::size_t total = 0;

    std::size_t global_index(int degree, std::size_t i) const;
    int degree_of(std::size_t g) const;
    std::size_t local_index(std::size_t g) const;

    const Elem& prod(std::size_t g1, std::size_t g2) const {
        return product[g1 * total + g2];
    }
    const Elem& brak(std::size_t g1, std::size_t g2) const {
        return bracket[g1 * total + g2];
    }

    // Bilinear extensions to sparse elements.
    Elem add(const Elem& a, const Elem& b) const;
    Elem scale(const Rat& c, const Elem& a) const;
    Elem prod_elem(const Elem& a, const Elem& b) const;
    Elem brak_elem(const Elem& a, const Elem& b) const;
    Elem unit(std::size_t g, int degree) const;

    // Applies per-degree operator matrices (D : degree k -> k-1).
    Elem apply(const std::vector<RatMatrix>& matrices, const Elem& a) const;
};

AlgebraTables build_tables(const Variety& variety);

struct AxiomBudget {
    std::size_t exhaustive_limit = 40;
    std::size_t samples = 1000;
    std::uint64_t seed = 1;
};

// Exhaustive (or seeded-sample) evaluation of the graded-algebra axioms on
// the tables: associativity, graded commutativity, graded anti-symmetry,
// the graded Jacobi identity, and the Leibniz compatibility. When operator
// matrices are supplied, also both characterizations of a generating
// operator (bracket generation + square zero, and the second-order product
// rule) with their equivalence cross-checked.
std::vector<OracleReport> oracle_axioms(const AlgebraTables& tables,
                                        const std::vector<RatMatrix>* op_matrices,
                                        const AxiomBudget& budget);

// The bracket of two field elements computed independently in the chart of
// the fan's first maximal cone.
WeightedPolyvector oracle_chart_bracket(const Fan& fan, const WeightedPolyvector& a,
                                        const WeightedPolyvector& b);

}  // namespace toricbv
