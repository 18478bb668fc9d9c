#include "toricbv/chart.hpp"

#include <sstream>

#include "toricbv/errors.hpp"
#include "toricbv/matrix.hpp"

namespace toricbv {

ChartPolyvector ChartPolyvector::monomial(const std::vector<Int>& exponents,
                                          const IndexTuple& derivatives, const Rat& c) {
    ChartPolyvector out(static_cast<int>(derivatives.size()));
    out.add_term({exponents, derivatives}, c);
    return out;
}

void ChartPolyvector::add_term(const Key& key, const Rat& c) {
    if (c.is_zero()) return;
    if (static_cast<int>(key.derivatives.size()) != degree_)
        throw input_error("chart polyvector: term degree mismatch");
    auto [it, inserted] = terms_.emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

ChartPolyvector& ChartPolyvector::operator+=(const ChartPolyvector& o) {
    if (terms_.empty() && !o.terms_.empty()) degree_ = o.degree_;
    if (!o.terms_.empty() && degree_ != o.degree_)
        throw input_error("chart polyvector addition: degree mismatch");
    for (const auto& [key, c] : o.terms_) add_term(key, c);
    return *this;
}

ChartPolyvector& ChartPolyvector::operator*=(const Rat& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [key, coeff] : terms_) coeff *= c;
    return *this;
}

std::string ChartPolyvector::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.str() << " z^(";
        for (std::size_t i = 0; i < key.exponents.size(); ++i)
            os << (i ? "," : "") << key.exponents[i].get_str();
        os << ")";
        for (int d : key.derivatives) os << " d" << (d + 1);
    }
    return os.str();
}

namespace {

std::vector<Int> add_exponents(const std::vector<Int>& a, const std::vector<Int>& b) {
    if (a.size() != b.size()) throw input_error("chart exponents: dimension mismatch");
    std::vector<Int> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

struct Mono {
    Rat c;
    std::vector<Int> exp;
    IndexTuple theta;
};

ChartPolyvector mono_to_poly(const Mono& m) {
    return ChartPolyvector::monomial(m.exp, m.theta, m.c);
}

// z-derivative along coordinate t: d/dz_t (c z^exp) = c * exp_t * z^(exp - e_t).
Mono z_derivative(const Mono& m, int t) {
    Mono out = m;
    out.c = m.c * Rat(m.exp[t]);
    out.exp[t] -= 1;
    return out;
}

ChartPolyvector wedge_theta(const ChartPolyvector& a, int t) {
    ChartPolyvector out(a.degree() + 1);
    IndexTuple single{t};
    IndexTuple merged;
    for (const auto& [key, c] : a.terms()) {
        const int sign = merge_sign(key.derivatives, single, merged);
        if (sign == 0) continue;
        out.add_term({key.exponents, merged}, sign > 0 ? c : -c);
    }
    return out;
}

ChartPolyvector bracket_mono(const Mono& a, const Mono& b);

// [X, b] with X a vector-field monomial (theta degree 1) and |b| = l >= 1.
ChartPolyvector bracket_vector_first(const Mono& x, const Mono& b) {
    const int t = x.theta[0];
    if (b.theta.size() == 1) {
        const int u = b.theta[0];
        // Lie bracket: X(coeff of Y) d_u - Y(coeff of X) d_t
        ChartPolyvector out(1);
        const Mono db_dt = z_derivative(b, t);
        if (!db_dt.c.is_zero())
            out.add_term({add_exponents(x.exp, db_dt.exp), {u}}, x.c * db_dt.c);
        const Mono dx_du = z_derivative(x, u);
        if (!dx_du.c.is_zero())
            out.add_term({add_exponents(b.exp, dx_du.exp), {t}}, -(b.c * dx_du.c));
        return out;
    }
    // Split b = Y ^ b' on its first derivative index and use the Leibniz
    // rule [X, Y^b'] = [X,Y]^b' + Y^[X,b']   (sign (+1) since |X|-1 = 0).
    Mono y{b.c, b.exp, {b.theta[0]}};
    Mono rest{Rat(1), std::vector<Int>(b.exp.size(), Int(0)),
              IndexTuple(b.theta.begin() + 1, b.theta.end())};
    ChartPolyvector out = chart_wedge(bracket_mono(x, y), mono_to_poly(rest));
    out += chart_wedge(mono_to_poly(y), bracket_mono(x, rest));
    return out;
}

ChartPolyvector bracket_mono(const Mono& a, const Mono& b) {
    const int k = static_cast<int>(a.theta.size());
    const int l = static_cast<int>(b.theta.size());

    if (k == 0 && l == 0) return ChartPolyvector(0);

    if (k == 0) {
        // [f, b] = (-1)^l [b, f]
        ChartPolyvector out = bracket_mono(b, a);
        if (l % 2 == 1) out *= Rat(-1);
        return out;
    }

    if (l == 0) {
        if (k == 1) {
            // [X, g] = X(g)
            const Mono dg = z_derivative(b, a.theta[0]);
            ChartPolyvector out(0);
            if (!dg.c.is_zero())
                out.add_term({add_exponents(a.exp, dg.exp), {}}, a.c * dg.c);
            return out;
        }
        // Split a = a' ^ d_t on the last derivative index:
        // [a'^d_t, g] = a' * (d_t g) - [a', g] ^ d_t.
        const int t = a.theta.back();
        Mono head{a.c, a.exp, IndexTuple(a.theta.begin(), a.theta.end() - 1)};
        const Mono dg = z_derivative(b, t);
        ChartPolyvector out(k - 1);
        if (!dg.c.is_zero())
            out.add_term({add_exponents(head.exp, dg.exp), head.theta}, head.c * dg.c);
        ChartPolyvector tail = wedge_theta(bracket_mono(head, b), t);
        tail *= Rat(-1);
        out += tail;
        return out;
    }

    if (k == 1) return bracket_vector_first(a, b);

    if (l == 1) {
        // [a, Y] = -[Y, a]  (graded antisymmetry with |Y| = 1)
        ChartPolyvector out = bracket_vector_first(b, a);
        out *= Rat(-1);
        return out;
    }

    // l >= 2: peel the first derivative of b:
    // [a, Y^b'] = [a,Y]^b' + (-1)^(k-1) Y^[a,b'].
    Mono y{b.c, b.exp, {b.theta[0]}};
    Mono rest{Rat(1), std::vector<Int>(b.exp.size(), Int(0)),
              IndexTuple(b.theta.begin() + 1, b.theta.end())};
    ChartPolyvector out = chart_wedge(bracket_mono(a, y), mono_to_poly(rest));
    ChartPolyvector second = chart_wedge(mono_to_poly(y), bracket_mono(a, rest));
    if ((k - 1) % 2 == 1) second *= Rat(-1);
    out += second;
    return out;
}

}  // namespace

ChartPolyvector chart_wedge(const ChartPolyvector& a, const ChartPolyvector& b) {
    ChartPolyvector out(a.degree() + b.degree());
    IndexTuple merged;
    for (const auto& [ka, ca] : a.terms()) {
        for (const auto& [kb, cb] : b.terms()) {
            const int sign = merge_sign(ka.derivatives, kb.derivatives, merged);
            if (sign == 0) continue;
            out.add_term({add_exponents(ka.exponents, kb.exponents), merged},
                         sign > 0 ? ca * cb : -(ca * cb));
        }
    }
    return out;
}

ChartPolyvector chart_schouten(const ChartPolyvector& a, const ChartPolyvector& b) {
    const int k = a.degree(), l = b.degree();
    const int out_degree = k + l >= 1 ? k + l - 1 : 0;
    ChartPolyvector out(out_degree);
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms())
            out += bracket_mono({ca, ka.exponents, ka.derivatives},
                                {cb, kb.exponents, kb.derivatives});
    return out;
}

namespace {

struct ChartFrame {
    RatMatrix generators;  // columns: the cone's ray generators
    RatMatrix inverse;     // integer entries for smooth cones
};

ChartFrame chart_frame(const Fan& fan, std::size_t cone) {
    if (cone >= fan.max_cones.size()) throw input_error("chart: cone index out of range");
    ChartFrame frame;
    frame.generators = fan.cone_matrix(cone);
    auto inv = inverse(frame.generators);
    if (!inv) throw input_error("chart: maximal cone is degenerate");
    for (std::size_t r = 0; r < inv->rows(); ++r)
        for (std::size_t c = 0; c < inv->cols(); ++c)
            if (!inv->at(r, c).is_integer())
                throw input_error("chart: maximal cone is not smooth");
    frame.inverse = *inv;
    return frame;
}

}  // namespace

ChartPolyvector to_chart(const Fan& fan, std::size_t cone, const WeightedPolyvector& a) {
    const ChartFrame frame = chart_frame(fan, cone);
    const int n = fan.dim;
    ChartPolyvector out(a.degree());

    for (const auto& [I, A] : a.terms()) {
        // chi^I = z^alpha with alpha_i = <I, u_i>
        std::vector<Int> alpha(n);
        for (int i = 0; i < n; ++i) {
            const Rat p = pairing(I, fan.rays[fan.max_cones[cone][i]]);
            alpha[i] = p.num();
        }
        ChartPolyvector chart_term = ChartPolyvector::monomial(alpha, {}, Rat(1));

        ChartPolyvector rho(A.degree());
        for (const auto& [tuple, c] : A.terms()) {
            // rho(e_j) = sum_i inverse[i][j] z_i d_i, wedged over the tuple
            ChartPolyvector factor_prod = ChartPolyvector::monomial(
                std::vector<Int>(n, Int(0)), {}, c);
            for (int j : tuple) {
                ChartPolyvector field(1);
                for (int i = 0; i < n; ++i) {
                    const Rat coeff = frame.inverse.at(i, j);
                    if (coeff.is_zero()) continue;
                    std::vector<Int> exp(n, Int(0));
                    exp[i] = 1;
                    field.add_term({exp, {i}}, coeff);
                }
                factor_prod = chart_wedge(factor_prod, field);
            }
            rho += factor_prod;
        }
        out += chart_wedge(chart_term, rho);
    }
    return out;
}

WeightedPolyvector from_chart(const Fan& fan, std::size_t cone, const ChartPolyvector& a) {
    const ChartFrame frame = chart_frame(fan, cone);
    const int n = fan.dim;
    WeightedPolyvector out(Variant::field, a.degree());

    for (const auto& [key, c] : a.terms()) {
        // c z^gamma theta_T = c z^(gamma - 1_T) * rho(u_T); the weight solves
        // G^T I = gamma - 1_T.
        std::vector<Int> alpha = key.exponents;
        for (int t : key.derivatives) alpha[t] -= 1;

        Weight I(n);
        for (int j = 0; j < n; ++j) {
            Rat v;
            for (int i = 0; i < n; ++i) v += frame.inverse.at(i, j) * Rat(alpha[i]);
            if (!v.is_integer())
                throw input_error("from_chart: monomial is not lattice-integral");
            I[j] = v.num();
        }

        Multivector u_wedge = Multivector::scalar(c);
        for (int t : key.derivatives) {
            u_wedge = wedge(u_wedge,
                            Multivector::from_vector(fan.rays[fan.max_cones[cone][t]]));
        }
        out.add_term(I, u_wedge);
    }
    return out;
}

}  // namespace toricbv
