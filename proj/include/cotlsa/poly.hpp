#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "cotlsa/scalar.hpp"

namespace cotlsa {

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are keyed by exponent vectors of a fixed length (the number of
/// variables). Zero coefficients are never stored, so a polynomial is zero
/// exactly when its term map is empty.
class MultiPoly {
public:
    using Exponents = std::vector<std::uint32_t>;
    using TermMap = std::map<Exponents, Scalar>;

    explicit MultiPoly(std::size_t nvars = 0) : nvars_(nvars) {}

    static MultiPoly constant(std::size_t nvars, const Scalar& c);
    static MultiPoly variable(std::size_t nvars, std::size_t index);

    std::size_t nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    unsigned degree() const;
    unsigned degree_in(std::size_t var) const;

    /// Coefficient of the given monomial (zero if absent).
    Scalar coefficient(const Exponents& e) const;

    void add_term(const Exponents& e, const Scalar& c);

    MultiPoly& operator+=(const MultiPoly& rhs);
    MultiPoly& operator-=(const MultiPoly& rhs);
    MultiPoly& operator*=(const Scalar& c);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const Scalar& c, MultiPoly p) { return p *= c; }
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) = default;

    Scalar evaluate(std::span<const Scalar> point) const;

    /// Fixes one variable to a value; the variable count is unchanged.
    MultiPoly substitute(std::size_t var, const Scalar& value) const;

    std::string str() const;

private:
    void check_compatible(const MultiPoly& other) const;

    std::size_t nvars_ = 0;
    TermMap terms_;
};

/// Square-or-rectangular matrix of polynomials sharing one variable set.
class PolyMatrix {
public:
    PolyMatrix(std::size_t rows, std::size_t cols, std::size_t nvars);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t nvars() const { return nvars_; }

    MultiPoly& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const MultiPoly& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool is_zero() const;
    MultiPoly trace() const;

    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);

private:
    std::size_t rows_;
    std::size_t cols_;
    std::size_t nvars_;
    std::vector<MultiPoly> data_;
};

/// trace(M^k) as an exact polynomial; k >= 1.
MultiPoly poly_matrix_power_trace(const PolyMatrix& m, unsigned k);

}  // namespace cotlsa
