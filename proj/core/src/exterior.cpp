#include "toricbv/exterior.hpp"

#include <algorithm>
#include <sstream>

#include "toricbv/errors.hpp"

namespace toricbv {

CharacterVector to_character(const Weight& w) {
    CharacterVector out(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) out[i] = Rat(w[i]);
    return out;
}

Weight operator+(const Weight& a, const Weight& b) {
    if (a.size() != b.size()) throw input_error("weight addition: dimension mismatch");
    Weight out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

Weight operator-(const Weight& a, const Weight& b) {
    if (a.size() != b.size()) throw input_error("weight subtraction: dimension mismatch");
    Weight out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

Rat pairing(const CharacterVector& m, const LatticeVector& x) {
    if (m.size() != x.size()) throw input_error("pairing: dimension mismatch");
    Rat s;
    for (std::size_t i = 0; i < m.size(); ++i) s += m[i] * Rat(x[i]);
    return s;
}

Rat pairing(const Weight& m, const LatticeVector& x) {
    if (m.size() != x.size()) throw input_error("pairing: dimension mismatch");
    Int s = 0;
    for (std::size_t i = 0; i < m.size(); ++i) s += m[i] * x[i];
    return Rat(s);
}

Multivector Multivector::scalar(const Rat& c) {
    Multivector m(0);
    m.add_term({}, c);
    return m;
}

Multivector Multivector::basis(const IndexTuple& tuple) {
    for (std::size_t i = 0; i + 1 < tuple.size(); ++i)
        if (tuple[i] >= tuple[i + 1])
            throw input_error("basis tuple not strictly increasing");
    Multivector m(static_cast<int>(tuple.size()));
    m.add_term(tuple, Rat(1));
    return m;
}

Multivector Multivector::from_vector(const RatVec& coords) {
    Multivector m(1);
    for (std::size_t i = 0; i < coords.size(); ++i)
        m.add_term({static_cast<int>(i)}, coords[i]);
    return m;
}

Multivector Multivector::from_vector(const LatticeVector& coords) {
    Multivector m(1);
    for (std::size_t i = 0; i < coords.size(); ++i)
        m.add_term({static_cast<int>(i)}, Rat(coords[i]));
    return m;
}

Rat Multivector::coefficient(const IndexTuple& tuple) const {
    auto it = terms_.find(tuple);
    return it == terms_.end() ? Rat(0) : it->second;
}

void Multivector::add_term(const IndexTuple& tuple, const Rat& c) {
    if (c.is_zero()) return;
    if (static_cast<int>(tuple.size()) != degree_)
        throw input_error("add_term: tuple size != multivector degree");
    auto [it, inserted] = terms_.emplace(tuple, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Multivector Multivector::operator-() const {
    Multivector out(degree_);
    for (const auto& [t, c] : terms_) out.terms_.emplace(t, -c);
    return out;
}

Multivector& Multivector::operator+=(const Multivector& o) {
    if (terms_.empty() && !o.terms_.empty()) degree_ = o.degree_;
    if (!o.terms_.empty() && degree_ != o.degree_)
        throw input_error("multivector addition: degree mismatch");
    for (const auto& [t, c] : o.terms_) add_term(t, c);
    return *this;
}

Multivector& Multivector::operator-=(const Multivector& o) {
    if (terms_.empty() && !o.terms_.empty()) degree_ = o.degree_;
    if (!o.terms_.empty() && degree_ != o.degree_)
        throw input_error("multivector subtraction: degree mismatch");
    for (const auto& [t, c] : o.terms_) add_term(t, -c);
    return *this;
}

Multivector& Multivector::operator*=(const Rat& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [t, coeff] : terms_) coeff *= c;
    return *this;
}

std::string Multivector::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [t, c] : terms_) {
        const bool neg = c.sign() < 0;
        const Rat mag = neg ? -c : c;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        const bool unit = (mag == Rat(1)) && !t.empty();
        if (!unit) os << mag.str() << (t.empty() ? "" : " ");
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (i) os << "^";
            os << "e" << (t[i] + 1);
        }
    }
    return os.str();
}

int merge_sign(const IndexTuple& a, const IndexTuple& b, IndexTuple& merged) {
    merged.clear();
    merged.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    long swaps = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return 0;
        if (a[i] < b[j]) {
            merged.push_back(a[i++]);
        } else {
            // b[j] passes over the remaining entries of a
            swaps += static_cast<long>(a.size() - i);
            merged.push_back(b[j++]);
        }
    }
    while (i < a.size()) merged.push_back(a[i++]);
    while (j < b.size()) merged.push_back(b[j++]);
    return (swaps % 2 == 0) ? 1 : -1;
}

Multivector wedge(const Multivector& a, const Multivector& b) {
    Multivector out(a.degree() + b.degree());
    IndexTuple merged;
    for (const auto& [s, cs] : a.terms()) {
        for (const auto& [t, ct] : b.terms()) {
            const int sign = merge_sign(s, t, merged);
            if (sign == 0) continue;
            out.add_term(merged, sign > 0 ? cs * ct : -(cs * ct));
        }
    }
    return out;
}

Multivector contract(const CharacterVector& alpha, const Multivector& a) {
    Multivector out(a.degree() > 0 ? a.degree() - 1 : 0);
    for (const auto& [t, c] : a.terms()) {
        for (std::size_t j = 0; j < t.size(); ++j) {
            if (t[j] < 0 || static_cast<std::size_t>(t[j]) >= alpha.size())
                throw input_error("contract: index outside covector dimension");
            const Rat& aj = alpha[t[j]];
            if (aj.is_zero()) continue;
            IndexTuple rest;
            rest.reserve(t.size() - 1);
            for (std::size_t i = 0; i < t.size(); ++i)
                if (i != j) rest.push_back(t[i]);
            const Rat val = c * aj;
            out.add_term(rest, (j % 2 == 0) ? val : -val);
        }
    }
    return out;
}

Multivector contract(const Weight& alpha, const Multivector& a) {
    return contract(to_character(alpha), a);
}

std::vector<IndexTuple> index_tuples(int n, int k) {
    std::vector<IndexTuple> out;
    if (k < 0 || k > n) return out;
    IndexTuple cur(k);
    // iterative lexicographic enumeration
    for (int i = 0; i < k; ++i) cur[i] = i;
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == n - k + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

}  // namespace toricbv
