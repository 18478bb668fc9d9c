#include "toricbv/algebra.hpp"

#include <sstream>

#include "toricbv/errors.hpp"

namespace toricbv {

namespace {

void require_same_shape(const WeightedPolyvector& a, const WeightedPolyvector& b) {
    if (a.variant() != b.variant())
        throw input_error("weighted polyvector operation: variant mismatch");
    if (!a.terms().empty() && !b.terms().empty() &&
        a.terms().begin()->first.size() != b.terms().begin()->first.size())
        throw input_error("weighted polyvector operation: ambient dimension mismatch");
}

}  // namespace

WeightedPolyvector WeightedPolyvector::monomial(Variant v, const Weight& I,
                                                const Multivector& a) {
    WeightedPolyvector out(v, a.degree());
    out.add_term(I, a);
    return out;
}

void WeightedPolyvector::add_term(const Weight& I, const Multivector& a) {
    if (a.is_zero()) return;
    if (a.degree() != degree_)
        throw input_error("weighted polyvector: term degree mismatch");
    auto [it, inserted] = terms_.emplace(I, a);
    if (!inserted) {
        it->second += a;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

WeightedPolyvector WeightedPolyvector::operator-() const {
    WeightedPolyvector out(variant_, degree_);
    for (const auto& [I, a] : terms_) out.terms_.emplace(I, -a);
    return out;
}

WeightedPolyvector& WeightedPolyvector::operator+=(const WeightedPolyvector& o) {
    require_same_shape(*this, o);
    if (terms_.empty() && !o.terms_.empty()) degree_ = o.degree_;
    if (!o.terms_.empty() && degree_ != o.degree_)
        throw input_error("weighted polyvector addition: degree mismatch");
    for (const auto& [I, a] : o.terms_) add_term(I, a);
    return *this;
}

WeightedPolyvector& WeightedPolyvector::operator-=(const WeightedPolyvector& o) {
    require_same_shape(*this, o);
    if (terms_.empty() && !o.terms_.empty()) degree_ = o.degree_;
    if (!o.terms_.empty() && degree_ != o.degree_)
        throw input_error("weighted polyvector subtraction: degree mismatch");
    for (const auto& [I, a] : o.terms_) add_term(I, -a);
    return *this;
}

WeightedPolyvector& WeightedPolyvector::operator*=(const Rat& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [I, a] : terms_) a *= c;
    return *this;
}

bool operator==(const WeightedPolyvector& a, const WeightedPolyvector& b) {
    if (a.variant_ != b.variant_) return false;
    if (a.terms_.empty() && b.terms_.empty()) return true;
    return a.degree_ == b.degree_ && a.terms_ == b.terms_;
}

std::string WeightedPolyvector::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [I, a] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "chi(";
        for (std::size_t i = 0; i < I.size(); ++i) os << (i ? "," : "") << I[i].get_str();
        os << ")";
        if (degree_ == 0) {
            os << " * " << a.coefficient({}).str();
        } else {
            os << " (" << a.str() << ")";
        }
    }
    return os.str();
}

WeightedPolyvector wedge_fields(const WeightedPolyvector& a, const WeightedPolyvector& b) {
    require_same_shape(a, b);
    WeightedPolyvector out(a.variant(), a.degree() + b.degree());
    for (const auto& [I, A] : a.terms())
        for (const auto& [J, B] : b.terms())
            out.add_term(I + J, wedge(A, B));
    return out;
}

WeightedPolyvector schouten(const WeightedPolyvector& a, const WeightedPolyvector& b) {
    require_same_shape(a, b);
    const int k = a.degree();
    const int l = b.degree();
    const int out_degree = k + l >= 1 ? k + l - 1 : 0;
    const int sign_outer = (k + 1) % 2 == 0 ? 1 : -1;
    const int sign_inner = k % 2 == 0 ? 1 : -1;

    WeightedPolyvector out(a.variant(), out_degree);
    for (const auto& [I, A] : a.terms()) {
        for (const auto& [J, B] : b.terms()) {
            Multivector term = wedge(contract(J, A), B);
            Multivector second = wedge(A, contract(I, B));
            if (sign_inner < 0) second *= Rat(-1);
            term += second;
            if (sign_outer < 0) term *= Rat(-1);
            out.add_term(I + J, term);
        }
    }
    return out;
}

WeightedPolyvector gamma_embed(const WeightedPolyvector& a) {
    if (a.variant() != Variant::field)
        throw input_error("gamma_embed: expected a field-variant element");
    WeightedPolyvector out(Variant::torus, a.degree());
    for (const auto& [I, A] : a.terms()) out.add_term(I, A);
    return out;
}

}  // namespace toricbv
