#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "toricbv/errors.hpp"

namespace toricbv {

// Arbitrary-precision integer. All lattice data lives here so that no
// computation in the library can overflow.
using Int = mpz_class;

// Arbitrary-precision rational, kept canonical (lowest terms, positive
// denominator) at every construction site. GMP canonicalizes results of
// arithmetic on canonical operands, so the invariant is stable.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(int n) : v_(n) {}                    // NOLINT: implicit by design
    Rat(long n) : v_((signed long)n) {}      // NOLINT
    Rat(const Int& n) : v_(n) {}             // NOLINT
    Rat(const Int& num, const Int& den) {
        if (den == 0) throw input_error("rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    Rat(int num, int den) : Rat(Int(num), Int(den)) {}

    static Rat from_mpq(const mpq_class& q) {
        Rat r;
        r.v_ = q;
        r.v_.canonicalize();
        return r;
    }

    // Accepts "p", "-p", "p/q".
    static Rat parse(const std::string& text);

    const Int num() const { return v_.get_num(); }
    const Int den() const { return v_.get_den(); }
    const mpq_class& mpq() const { return v_; }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Int floor() const;
    Int ceil() const;

    Rat operator-() const { return from_raw(-v_); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw input_error("rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

    std::string str() const { return v_.get_str(); }

private:
    static Rat from_raw(const mpq_class& q) {
        Rat r;
        r.v_ = q;
        return r;
    }
    mpq_class v_;
};

using RatVec = std::vector<Rat>;

std::string to_string(const Rat& r);
std::string to_string(const RatVec& v);

Rat dot(const RatVec& a, const RatVec& b);

}  // namespace toricbv
