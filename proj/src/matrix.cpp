#include "cotlsa/matrix.hpp"

#include <sstream>
#include <utility>

#include "cotlsa/errors.hpp"

namespace cotlsa {

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t i) {
    Vector v(n);
    v.at(i) = 1;
    return v;
}

bool is_zero(std::span<const Scalar> v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

Vector add(std::span<const Scalar> a, std::span<const Scalar> b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
    Vector out(a.begin(), a.end());
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return out;
}

Vector sub(std::span<const Scalar> a, std::span<const Scalar> b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
    Vector out(a.begin(), a.end());
    for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    return out;
}

Vector scale(const Scalar& c, std::span<const Scalar> v) {
    Vector out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(c * x);
    return out;
}

std::string to_string(std::span<const Scalar> v) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
    os << ']';
    return os.str();
}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows * cols) throw DimensionMismatch("matrix data has wrong length");
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw DimensionMismatch("row has wrong length");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols, std::size_t rows) {
    Matrix m(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != rows) throw DimensionMismatch("column has wrong length");
        for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
    }
    return m;
}

Vector Matrix::row(std::size_t r) const {
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Vector Matrix::apply(std::span<const Scalar> v) const {
    if (v.size() != cols_) throw DimensionMismatch("matrix/vector size mismatch");
    Vector out(rows_);
    for (std::size_t c = 0; c < cols_; ++c) {
        if (v[c].is_zero()) continue;
        for (std::size_t r = 0; r < rows_; ++r) {
            const auto& a = (*this)(r, c);
            if (!a.is_zero()) out[r] += a * v[c];
        }
    }
    return out;
}

bool Matrix::is_zero() const { return cotlsa::is_zero(data_); }

Matrix& Matrix::operator+=(const Matrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionMismatch("matrix shapes differ");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionMismatch("matrix shapes differ");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const auto& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const auto& bkj = b(k, j);
                if (!bkj.is_zero()) out(i, j) += aik * bkj;
            }
        }
    return out;
}

Matrix operator*(const Scalar& c, Matrix m) {
    for (auto& x : m.data_) x *= c;
    return m;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

EchelonForm reduced_echelon(Matrix m) {
    std::vector<std::size_t> pivots;
    std::size_t lead_row = 0;
    for (std::size_t col = 0; col < m.cols() && lead_row < m.rows(); ++col) {
        std::size_t pivot = lead_row;
        while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != lead_row)
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(lead_row, c));

        const Scalar inv = m(lead_row, col).inverse();
        for (std::size_t c = col; c < m.cols(); ++c) m(lead_row, c) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == lead_row || m(r, col).is_zero()) continue;
            const Scalar factor = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c)
                if (!m(lead_row, c).is_zero()) m(r, c) -= factor * m(lead_row, c);
        }
        pivots.push_back(col);
        ++lead_row;
    }

    Matrix reduced(pivots.size(), m.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) reduced(r, c) = m(r, c);
    return {std::move(reduced), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return reduced_echelon(m).pivots.size(); }

Scalar determinant(Matrix m) {
    if (!m.is_square()) throw NonSquareMatrix("determinant of non-square matrix");
    const std::size_t n = m.rows();
    Scalar det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m(pivot, col).is_zero()) ++pivot;
        if (pivot == n) return 0;
        if (pivot != col) {
            for (std::size_t c = 0; c < n; ++c) std::swap(m(pivot, c), m(col, c));
            det = -det;
        }
        det *= m(col, col);
        const Scalar inv = m(col, col).inverse();
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m(r, col).is_zero()) continue;
            const Scalar factor = m(r, col) * inv;
            for (std::size_t c = col; c < n; ++c) m(r, c) -= factor * m(col, c);
        }
    }
    return det;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (!m.is_square()) throw NonSquareMatrix("inverse of non-square matrix");
    const std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
        aug(r, n + r) = 1;
    }
    auto ech = reduced_echelon(std::move(aug));
    if (ech.pivots.size() < n || ech.pivots[n - 1] != n - 1) return std::nullopt;
    Matrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv(r, c) = ech.reduced(r, n + c);
    return inv;
}

std::vector<Vector> kernel(const Matrix& m) {
    const auto ech = reduced_echelon(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : ech.pivots) is_pivot[p] = true;

    std::vector<Vector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vector v(m.cols());
        v[free] = 1;
        for (std::size_t r = 0; r < ech.pivots.size(); ++r) v[ech.pivots[r]] = -ech.reduced(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

Matrix power(const Matrix& m, unsigned k) {
    if (!m.is_square()) throw NonSquareMatrix("power of non-square matrix");
    Matrix out = Matrix::identity(m.rows());
    for (unsigned i = 0; i < k; ++i) out = out * m;
    return out;
}

Scalar trace(const Matrix& m) {
    if (!m.is_square()) throw NonSquareMatrix("trace of non-square matrix");
    Scalar t;
    for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
    return t;
}

}  // namespace cotlsa
