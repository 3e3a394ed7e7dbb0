#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

#include "dodgson/error.hpp"

namespace dodgson {

/// Arbitrary-precision integer.
using Int = mpz_class;

/// Renders an integer in decimal.
std::string int_str(const Int& n);

/// Parses an optionally signed decimal integer. Throws ParseError on
/// anything else (including empty input and stray characters).
Int parse_int(std::string_view text);

/// Exact division of integers. Throws ZeroDivisorError when `den` is zero
/// and InternalError when the quotient would not be integral; callers use it
/// precisely where integrality is an invariant, never as rounding division.
Int exact_div(const Int& num, const Int& den);

/// Exact rational scalar. Invariant: lowest terms, positive denominator;
/// integers are the denominator-one case. Arithmetic never rounds and never
/// overflows.
class Scalar {
public:
    Scalar() : v_(0) {}
    Scalar(long n) : v_(n) {}  // NOLINT: implicit by design, makes literals usable
    Scalar(const Int& n) : v_(n) {}
    Scalar(const Int& num, const Int& den);

    /// Accepts "p", "-p", or "p/q" with decimal p, q. Throws ParseError on
    /// malformed text and ZeroDivisorError on a zero denominator.
    static Scalar parse(std::string_view text);

    Int numerator() const { return v_.get_num(); }
    Int denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    /// "p" when integral, "p/q" otherwise.
    std::string str() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    /// Exact; throws ZeroDivisorError when dividing by zero.
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return a.v_ != b.v_; }
    friend bool operator<(const Scalar& a, const Scalar& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Scalar& a, const Scalar& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Scalar& a, const Scalar& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Scalar& a, const Scalar& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Scalar& s);

private:
    mpq_class v_;  // invariant: canonical form
};

/// Exact rational division; identical to operator/ and named for call sites
/// where exactness is the point.
Scalar exact_div(const Scalar& num, const Scalar& den);

}  // namespace dodgson
