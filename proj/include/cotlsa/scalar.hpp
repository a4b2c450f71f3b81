#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace cotlsa {

/// Exact rational number in canonical form (positive denominator, reduced).
///
/// Every parameter of the constructions lives here; there is no floating
/// point mode. Values are immutable once built and safe to share between
/// threads for reading.
class Scalar {
public:
    Scalar() = default;
    Scalar(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    Scalar(long numerator, long denominator);
    explicit Scalar(mpq_class value);

    /// Parses "p/q" or "p" (optional leading '-'). Decimals are rejected.
    static Scalar parse(std::string_view text);

    /// Canonical "p/q", or "p" when the denominator is one.
    std::string str() const;

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }
    const mpq_class& raw() const { return value_; }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    Scalar abs() const;
    Scalar inverse() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& rhs);
    Scalar& operator-=(const Scalar& rhs);
    Scalar& operator*=(const Scalar& rhs);
    Scalar& operator/=(const Scalar& rhs);

    friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
    friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
    friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
    friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

enum class ArithOp { add, sub, mul, div };

/// Dispatching form of the four field operations; div by zero throws.
Scalar scalar_arith(const Scalar& a, const Scalar& b, ArithOp op);

/// (-1)^k as a Scalar.
inline Scalar sign_power(long k) { return (k % 2 == 0) ? Scalar(1) : Scalar(-1); }

}  // namespace cotlsa
