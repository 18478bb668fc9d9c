#pragma once

#include <map>
#include <string>
#include <vector>

#include "toricbv/rational.hpp"

namespace toricbv {

// Element of the cocharacter lattice N (a one-parameter-subgroup direction).
using LatticeVector = std::vector<Int>;

// Integer point of the character lattice M; also used as a map key for
// weight-indexed data, relying on the lexicographic vector order.
using Weight = std::vector<Int>;

// Point of M tensored with Q: covectors for contraction, the operator
// parameter delta, and similar rational data on the character side.
using CharacterVector = RatVec;

CharacterVector to_character(const Weight& w);
Weight operator+(const Weight& a, const Weight& b);
Weight operator-(const Weight& a, const Weight& b);

// <m, x> = sum m_i x_i, the canonical pairing of M_Q against N.
Rat pairing(const CharacterVector& m, const LatticeVector& x);
Rat pairing(const Weight& m, const LatticeVector& x);

// Strictly increasing tuple of 0-based basis indices; the canonical label of
// a wedge monomial e_{s_1} ^ ... ^ e_{s_k}.
using IndexTuple = std::vector<int>;

// Element of ∧^k N_Q in the canonical sparse form: a map from strictly
// increasing index tuples to nonzero rational coefficients. The map order is
// the canonical basis order of ∧^k, which makes equality and printing exact.
class Multivector {
public:
    Multivector() : degree_(0) {}
    explicit Multivector(int degree) : degree_(degree) {}

    static Multivector scalar(const Rat& c);
    static Multivector basis(const IndexTuple& tuple);  // coefficient 1
    // Degree-1 vector with the given coordinates.
    static Multivector from_vector(const RatVec& coords);
    static Multivector from_vector(const LatticeVector& coords);

    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<IndexTuple, Rat>& terms() const { return terms_; }

    Rat coefficient(const IndexTuple& tuple) const;
    void add_term(const IndexTuple& tuple, const Rat& c);  // accumulates, drops zeros

    Multivector operator-() const;
    Multivector& operator+=(const Multivector& o);
    Multivector& operator-=(const Multivector& o);
    Multivector& operator*=(const Rat& c);

    friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
    friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
    friend Multivector operator*(const Rat& c, Multivector a) { return a *= c; }

    // Zero multivectors compare equal regardless of their degree tag.
    friend bool operator==(const Multivector& a, const Multivector& b) {
        if (a.terms_.empty() && b.terms_.empty()) return true;
        return a.degree_ == b.degree_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Multivector& a, const Multivector& b) { return !(a == b); }

    // e.g. "e1^e2 - 2 e1^e3", with 1-based indices; "0" when zero.
    std::string str() const;

private:
    int degree_;
    std::map<IndexTuple, Rat> terms_;
};

// Exterior product. Degrees add; the result is zero whenever a basis index
// repeats, so degrees above the ambient dimension vanish automatically.
Multivector wedge(const Multivector& a, const Multivector& b);

// Contraction by a covector: the anti-derivation with
// iota_alpha(e_j) = alpha_j on degree one and zero on scalars.
Multivector contract(const CharacterVector& alpha, const Multivector& a);
Multivector contract(const Weight& alpha, const Multivector& a);

// Sign of merging two disjoint increasing tuples into one increasing tuple:
// (-1)^(number of transpositions). Returns 0 when the tuples intersect.
int merge_sign(const IndexTuple& a, const IndexTuple& b, IndexTuple& merged);

// All strictly increasing k-tuples in {0,...,n-1}, in lexicographic order;
// this is the coordinate order used for echelon forms on ∧^k.
std::vector<IndexTuple> index_tuples(int n, int k);

}  // namespace toricbv
