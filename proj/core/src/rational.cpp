#include "toricbv/rational.hpp"

#include <sstream>

namespace toricbv {

Rat Rat::parse(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rat(Int(text), Int(1));
        }
        Int num(text.substr(0, slash));
        Int den(text.substr(slash + 1));
        return Rat(num, den);
    } catch (const std::invalid_argument&) {
        throw input_error("unparsable rational: '" + text + "'");
    }
}

Int Rat::floor() const {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return q;
}

Int Rat::ceil() const {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return q;
}

std::string to_string(const Rat& r) { return r.str(); }

std::string to_string(const RatVec& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << v[i].str();
    }
    os << ")";
    return os.str();
}

Rat dot(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw input_error("dot: dimension mismatch");
    Rat s;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace toricbv
