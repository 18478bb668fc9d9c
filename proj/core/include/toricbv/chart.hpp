#pragma once

#include <map>
#include <string>

#include "toricbv/algebra.hpp"
#include "toricbv/fan.hpp"

namespace toricbv {

// Polyvector field in the coordinate chart of one smooth maximal cone:
// a sum of monomials  c * z^alpha * d_{t_1} ^ ... ^ d_{t_k}  with Laurent
// exponents alpha and strictly increasing derivative tuples. This is the
// independent representation used to cross-check the algebraic bracket.
class ChartPolyvector {
public:
    struct Key {
        std::vector<Int> exponents;  // Laurent exponents of z
        IndexTuple derivatives;      // 0-based coordinate indices

        bool operator<(const Key& o) const {
            if (exponents != o.exponents) return exponents < o.exponents;
            return derivatives < o.derivatives;
        }
        bool operator==(const Key& o) const {
            return exponents == o.exponents && derivatives == o.derivatives;
        }
    };

    ChartPolyvector() : degree_(0) {}
    explicit ChartPolyvector(int degree) : degree_(degree) {}

    static ChartPolyvector monomial(const std::vector<Int>& exponents,
                                    const IndexTuple& derivatives, const Rat& c);

    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Key, Rat>& terms() const { return terms_; }

    void add_term(const Key& key, const Rat& c);

    ChartPolyvector& operator+=(const ChartPolyvector& o);
    ChartPolyvector& operator*=(const Rat& c);
    friend ChartPolyvector operator+(ChartPolyvector a, const ChartPolyvector& b) {
        return a += b;
    }

    friend bool operator==(const ChartPolyvector& a, const ChartPolyvector& b) {
        if (a.terms_.empty() && b.terms_.empty()) return true;
        return a.degree_ == b.degree_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const ChartPolyvector& a, const ChartPolyvector& b) {
        return !(a == b);
    }

    std::string str() const;

private:
    int degree_;
    std::map<Key, Rat> terms_;
};

// Exterior product of chart polyvectors.
ChartPolyvector chart_wedge(const ChartPolyvector& a, const ChartPolyvector& b);

// Schouten bracket computed recursively from the defining rules: the Lie
// bracket on vector fields, [X, f] = X(f) on functions, bilinearity, graded
// antisymmetry, and the graded Leibniz rule. Entirely independent of the
// contraction-based bracket it is used to check.
ChartPolyvector chart_schouten(const ChartPolyvector& a, const ChartPolyvector& b);

// Translation into the chart of maximal cone `cone` of a smooth fan, and
// back. chi^I maps to the Laurent monomial with exponents <I, u_i> over the
// cone generators u_i, and the generator field of u_i maps to z_i d_i.
ChartPolyvector to_chart(const Fan& fan, std::size_t cone, const WeightedPolyvector& a);
WeightedPolyvector from_chart(const Fan& fan, std::size_t cone, const ChartPolyvector& a);

}  // namespace toricbv
