#include "cotlsa/scalar.hpp"

#include <cctype>
#include <ostream>

#include "cotlsa/errors.hpp"

namespace cotlsa {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Scalar::Scalar(long numerator, long denominator) {
    if (denominator == 0) throw DivisionByZero("zero denominator");
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Scalar::Scalar(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Scalar Scalar::parse(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        throw ParseError("not an exact rational: '" + std::string(text) + "'");

    mpz_class p(std::string(num), 10);
    mpz_class q(std::string(den), 10);
    if (q == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    if (negative) p = -p;
    return Scalar(mpq_class(p, q));
}

std::string Scalar::str() const { return value_.get_str(10); }

Scalar Scalar::abs() const { return Scalar(mpq_class(::abs(value_))); }

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    return Scalar(mpq_class(1) / value_);
}

Scalar Scalar::operator-() const { return Scalar(mpq_class(-value_)); }

Scalar& Scalar::operator+=(const Scalar& rhs) {
    value_ += rhs.value_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
    if (rhs.is_zero()) throw DivisionByZero("division by zero");
    value_ /= rhs.value_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

Scalar scalar_arith(const Scalar& a, const Scalar& b, ArithOp op) {
    switch (op) {
        case ArithOp::add: return a + b;
        case ArithOp::sub: return a - b;
        case ArithOp::mul: return a * b;
        case ArithOp::div: return a / b;
    }
    return {};
}

}  // namespace cotlsa
