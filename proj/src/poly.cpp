#include "cotlsa/poly.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "cotlsa/errors.hpp"

namespace cotlsa {

MultiPoly MultiPoly::constant(std::size_t nvars, const Scalar& c) {
    MultiPoly p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t index) {
    if (index >= nvars) throw DimensionMismatch("variable index out of range");
    Exponents e(nvars, 0);
    e[index] = 1;
    MultiPoly p(nvars);
    p.add_term(e, 1);
    return p;
}

unsigned MultiPoly::degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) {
        unsigned total = 0;
        for (auto x : e) total += x;
        d = std::max(d, total);
    }
    return d;
}

unsigned MultiPoly::degree_in(std::size_t var) const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max<unsigned>(d, e.at(var));
    return d;
}

Scalar MultiPoly::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Scalar() : it->second;
}

void MultiPoly::add_term(const Exponents& e, const Scalar& c) {
    if (e.size() != nvars_) throw DimensionMismatch("exponent vector has wrong length");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void MultiPoly::check_compatible(const MultiPoly& other) const {
    if (nvars_ != other.nvars_) throw DimensionMismatch("polynomials over different variable sets");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
    check_compatible(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
    check_compatible(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Scalar& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, coeff] : terms_) coeff *= c;
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_compatible(b);
    MultiPoly out(a.nvars_);
    if (a.is_zero() || b.is_zero()) return out;
    MultiPoly::Exponents e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    return out;
}

Scalar MultiPoly::evaluate(std::span<const Scalar> point) const {
    if (point.size() != nvars_) throw DimensionMismatch("evaluation point has wrong length");
    Scalar total;
    for (const auto& [e, c] : terms_) {
        Scalar term = c;
        for (std::size_t i = 0; i < nvars_ && !term.is_zero(); ++i)
            for (std::uint32_t k = 0; k < e[i]; ++k) term *= point[i];
        total += term;
    }
    return total;
}

MultiPoly MultiPoly::substitute(std::size_t var, const Scalar& value) const {
    if (var >= nvars_) throw DimensionMismatch("variable index out of range");
    MultiPoly out(nvars_);
    for (const auto& [e, c] : terms_) {
        Scalar coeff = c;
        for (std::uint32_t k = 0; k < e[var]; ++k) coeff *= value;
        Exponents reduced = e;
        reduced[var] = 0;
        out.add_term(reduced, coeff);
    }
    return out;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            os << "*x" << i;
            if (e[i] > 1) os << '^' << e[i];
        }
    }
    return os.str();
}

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, std::size_t nvars)
    : rows_(rows), cols_(cols), nvars_(nvars), data_(rows * cols, MultiPoly(nvars)) {}

bool PolyMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const MultiPoly& p) { return p.is_zero(); });
}

MultiPoly PolyMatrix::trace() const {
    if (rows_ != cols_) throw NonSquareMatrix("trace of non-square polynomial matrix");
    MultiPoly t(nvars_);
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.cols_ != b.rows_ || a.nvars_ != b.nvars_) throw DimensionMismatch("polynomial matrix shapes differ");
    PolyMatrix out(a.rows_, b.cols_, a.nvars_);
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

MultiPoly poly_matrix_power_trace(const PolyMatrix& m, unsigned k) {
    if (m.rows() != m.cols()) throw NonSquareMatrix("power of non-square polynomial matrix");
    if (k == 0) throw DimensionMismatch("power must be at least 1");

    // square-and-multiply
    std::optional<PolyMatrix> result;
    PolyMatrix base = m;
    for (unsigned e = k;;) {
        if (e & 1U) result = result ? (*result) * base : base;
        e >>= 1U;
        if (e == 0) break;
        base = base * base;
    }
    return result->trace();
}

}  // namespace cotlsa
