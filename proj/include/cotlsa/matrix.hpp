#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cotlsa/scalar.hpp"

namespace cotlsa {

using Vector = std::vector<Scalar>;

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(std::span<const Scalar> v);
Vector add(std::span<const Scalar> a, std::span<const Scalar> b);
Vector sub(std::span<const Scalar> a, std::span<const Scalar> b);
Vector scale(const Scalar& c, std::span<const Scalar> v);
std::string to_string(std::span<const Scalar> v);

/// Dense row-major matrix over the rationals.
///
/// A square Matrix acting on coordinate columns is also how linear maps are
/// represented: column j holds the image of basis vector j.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> data);

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
    static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vector row(std::size_t r) const;
    Vector column(std::size_t c) const;

    Matrix transpose() const;
    Vector apply(std::span<const Scalar> v) const;
    bool is_zero() const;

    Matrix& operator+=(const Matrix& rhs);
    Matrix& operator-=(const Matrix& rhs);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Scalar& c, Matrix m);
    friend bool operator==(const Matrix& a, const Matrix& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

/// Matrix commutator [A, B] = AB - BA.
Matrix commutator(const Matrix& a, const Matrix& b);

struct EchelonForm {
    Matrix reduced;                   // reduced row echelon form, zero rows dropped
    std::vector<std::size_t> pivots;  // pivot column of each row
};

EchelonForm reduced_echelon(Matrix m);
std::size_t rank(const Matrix& m);
Scalar determinant(Matrix m);
std::optional<Matrix> inverse(const Matrix& m);

/// Basis of {x : m x = 0}, one vector per free column.
std::vector<Vector> kernel(const Matrix& m);

/// Matrix power by repeated multiplication, k >= 0.
Matrix power(const Matrix& m, unsigned k);

Scalar trace(const Matrix& m);

}  // namespace cotlsa
