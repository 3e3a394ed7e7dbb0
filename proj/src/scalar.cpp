#include "dodgson/scalar.hpp"

#include <cctype>
#include <ostream>

namespace dodgson {

std::string int_str(const Int& n) { return n.get_str(); }

namespace {

bool is_decimal(std::string_view text) {
    std::size_t i = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
    if (i == text.size()) return false;
    for (; i < text.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
    return true;
}

}  // namespace

Int parse_int(std::string_view text) {
    if (!is_decimal(text)) throw ParseError("not a decimal integer: '" + std::string(text) + "'");
    if (text[0] == '+') text.remove_prefix(1);  // mpz rejects an explicit plus
    return Int(std::string(text));
}

Int exact_div(const Int& num, const Int& den) {
    if (sgn(den) == 0) throw ZeroDivisorError();
    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
        throw InternalError("inexact integer division: " + int_str(num) + " / " + int_str(den));
    Int q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

Scalar::Scalar(const Int& num, const Int& den) {
    if (sgn(den) == 0) throw ZeroDivisorError();
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Scalar Scalar::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Scalar(parse_int(text));
    return Scalar(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

std::string Scalar::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Scalar Scalar::operator-() const {
    Scalar out;
    out.v_ = -v_;
    return out;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    v_ += o.v_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    v_ -= o.v_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    v_ *= o.v_;
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_zero()) throw ZeroDivisorError();
    v_ /= o.v_;
    return *this;
}

Scalar exact_div(const Scalar& num, const Scalar& den) { return num / den; }

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace dodgson
