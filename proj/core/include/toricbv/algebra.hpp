#pragma once

#include <map>
#include <string>

#include "toricbv/exterior.hpp"

namespace toricbv {

// Which algebra an element lives in. Field elements represent global
// polyvector fields on the variety (their weight blocks are constrained);
// torus elements are arbitrary finitely supported sums over the whole
// character lattice.
enum class Variant { field, torus };

// Homogeneous element sum_I chi^I . A_I of degree k: a finite map from
// integer weights to degree-k multivectors. Field-variant elements are
// expected to satisfy the weight-block membership for every term; the
// operations preserve that property, and construction sites with a graded
// basis at hand can assert it.
class WeightedPolyvector {
public:
    WeightedPolyvector() : variant_(Variant::field), degree_(0) {}
    WeightedPolyvector(Variant v, int degree) : variant_(v), degree_(degree) {}

    static WeightedPolyvector monomial(Variant v, const Weight& I, const Multivector& a);

    Variant variant() const { return variant_; }
    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Weight, Multivector>& terms() const { return terms_; }

    void add_term(const Weight& I, const Multivector& a);  // accumulates, drops zeros

    WeightedPolyvector operator-() const;
    WeightedPolyvector& operator+=(const WeightedPolyvector& o);
    WeightedPolyvector& operator-=(const WeightedPolyvector& o);
    WeightedPolyvector& operator*=(const Rat& c);

    friend WeightedPolyvector operator+(WeightedPolyvector a, const WeightedPolyvector& b) {
        return a += b;
    }
    friend WeightedPolyvector operator-(WeightedPolyvector a, const WeightedPolyvector& b) {
        return a -= b;
    }
    friend WeightedPolyvector operator*(const Rat& c, WeightedPolyvector a) { return a *= c; }

    // Zero elements compare equal regardless of degree tag; variants must agree.
    friend bool operator==(const WeightedPolyvector& a, const WeightedPolyvector& b);
    friend bool operator!=(const WeightedPolyvector& a, const WeightedPolyvector& b) {
        return !(a == b);
    }

    // e.g. "chi(-1,0) e1 + 2 chi(0,0) e2"
    std::string str() const;

private:
    Variant variant_;
    int degree_;
    std::map<Weight, Multivector> terms_;
};

// Product: (chi^I . A) ^ (chi^J . B) = chi^(I+J) . (A ^ B), extended
// bilinearly. Zero when the degrees overflow the ambient dimension.
WeightedPolyvector wedge_fields(const WeightedPolyvector& a, const WeightedPolyvector& b);

// The degree -1 bracket: on monomials of degrees k and l,
//   [chi^I.A, chi^J.B] = (-1)^(k+1) chi^(I+J).( (i_J A)^B + (-1)^k A^(i_I B) ),
// extended bilinearly. Contractions by a weight kill scalars, so brackets
// against degree-0 constants vanish.
WeightedPolyvector schouten(const WeightedPolyvector& a, const WeightedPolyvector& b);

// Embedding of the field algebra into the torus algebra: identity on the
// (weight, multivector) data.
WeightedPolyvector gamma_embed(const WeightedPolyvector& a);

}  // namespace toricbv
