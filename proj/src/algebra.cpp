#include "cotlsa/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <tuple>

#include "cotlsa/errors.hpp"

namespace cotlsa {

std::string BasisLabel::str() const {
    switch (kind) {
        case Kind::t: return "t";
        case Kind::z: return "z";
        case Kind::e: return "e" + std::to_string(index);
        case Kind::f: return "f" + std::to_string(index);
        case Kind::generic: return name;
    }
    return name;
}

BasisLabel BasisLabel::parse(std::string_view text) {
    if (text.empty()) throw ParseError("empty basis label");
    if (text == "t") return t();
    if (text == "z") return z();
    if ((text[0] == 'e' || text[0] == 'f') && text.size() > 1 && text[1] != '0') {
        unsigned value = 0;
        const auto* first = text.data() + 1;
        const auto* last = text.data() + text.size();
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec == std::errc() && ptr == last && value > 0) return text[0] == 'e' ? e(value) : f(value);
    }
    return generic(std::string(text));
}

LieAlgebra::LieAlgebra(std::vector<BasisLabel> labels, std::vector<StructureConstant> constants)
    : labels_(std::move(labels)), upper_(labels_.size() * labels_.size()) {
    const std::size_t n = labels_.size();
    if (n == 0) throw DimensionMismatch("Lie algebra must have positive dimension");

    for (auto& sc : constants) {
        if (sc.i >= n || sc.j >= n || sc.k >= n) throw DimensionMismatch("structure constant index out of range");
        if (sc.i == sc.j) {
            if (!sc.c.is_zero()) throw ParseError("nonzero bracket [x_i, x_i]");
            continue;
        }
        if (sc.i > sc.j) {
            std::swap(sc.i, sc.j);
            sc.c = -sc.c;
        }
    }
    std::erase_if(constants, [](const StructureConstant& sc) { return sc.i == sc.j || sc.c.is_zero(); });
    std::sort(constants.begin(), constants.end(), [](const auto& a, const auto& b) {
        return std::tie(a.i, a.j, a.k) < std::tie(b.i, b.j, b.k);
    });
    for (std::size_t q = 1; q < constants.size(); ++q) {
        const auto& a = constants[q - 1];
        const auto& b = constants[q];
        if (a.i == b.i && a.j == b.j && a.k == b.k) throw ParseError("duplicate structure constant");
    }
    constants_ = std::move(constants);
    for (const auto& sc : constants_) upper_[sc.i * n + sc.j].emplace_back(sc.k, sc.c);
}

LieAlgebra LieAlgebra::abelian(std::size_t dim) {
    std::vector<BasisLabel> labels;
    for (std::size_t i = 0; i < dim; ++i) labels.push_back(BasisLabel::generic("x" + std::to_string(i + 1)));
    return LieAlgebra(std::move(labels), {});
}

SparseVector LieAlgebra::basis_bracket(std::size_t i, std::size_t j) const {
    if (i == j) return {};
    if (i < j) return upper_[i * dim() + j];
    SparseVector out = upper_[j * dim() + i];
    for (auto& [k, c] : out) c = -c;
    return out;
}

Matrix LieAlgebra::ad(std::span<const Scalar> x) const {
    if (x.size() != dim()) throw DimensionMismatch("vector length differs from algebra dimension");
    Matrix m(dim(), dim());
    for (std::size_t i = 0; i < dim(); ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim(); ++j)
            for (const auto& [k, c] : basis_bracket(i, j)) m(k, j) += x[i] * c;
    }
    return m;
}

Matrix LieAlgebra::ad_basis(std::size_t i) const { return ad(unit_vector(dim(), i)); }

std::optional<std::size_t> LieAlgebra::index_of(const BasisLabel& label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return i;
    return std::nullopt;
}

Vector bracket(const LieAlgebra& L, std::span<const Scalar> x, std::span<const Scalar> y) {
    if (x.size() != L.dim() || y.size() != L.dim())
        throw DimensionMismatch("vector length differs from algebra dimension");
    Vector out(L.dim());
    for (std::size_t i = 0; i < L.dim(); ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < L.dim(); ++j) {
            if (y[j].is_zero()) continue;
            const Scalar w = x[i] * y[j];
            for (const auto& [k, c] : L.basis_bracket(i, j)) out[k] += w * c;
        }
    }
    return out;
}

VerificationReport check_jacobi(const LieAlgebra& L) {
    VerificationReport report("check_jacobi");
    const std::size_t n = L.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                const auto xi = unit_vector(n, i), xj = unit_vector(n, j), xk = unit_vector(n, k);
                Vector sum = bracket(L, xi, bracket(L, xj, xk));
                sum = add(sum, bracket(L, xj, bracket(L, xk, xi)));
                sum = add(sum, bracket(L, xk, bracket(L, xi, xj)));
                if (!is_zero(sum)) report.record({"jacobi", {i, j, k}, sum, zero_vector(n)});
            }
    return report;
}

VerificationReport check_lie_homomorphism(const LieAlgebra& source, const LieAlgebra& target, const Matrix& phi) {
    if (phi.rows() != target.dim() || phi.cols() != source.dim())
        throw DimensionMismatch("map shape does not match the algebras");
    VerificationReport report("check_lie_homomorphism");
    std::vector<Vector> images;
    for (std::size_t i = 0; i < source.dim(); ++i) images.push_back(phi.column(i));
    for (std::size_t i = 0; i < source.dim(); ++i)
        for (std::size_t j = i + 1; j < source.dim(); ++j) {
            Vector lhs = phi.apply(bracket(source, unit_vector(source.dim(), i), unit_vector(source.dim(), j)));
            Vector rhs = bracket(target, images[i], images[j]);
            if (lhs != rhs) report.record({"lie_bracket", {i, j}, std::move(lhs), std::move(rhs)});
        }
    return report;
}

Matrix jordan_nilpotent_block(unsigned n) {
    if (n < 2) throw SizeTooSmall("Jordan block needs n >= 2");
    Matrix J(n, n);
    for (unsigned i = 0; i + 1 < n; ++i) J(i, i + 1) = 1;
    return J;
}

LieAlgebra semidirect_sum(const Matrix& D) {
    if (!D.is_square()) throw NonSquareMatrix("derivation must be square");
    const std::size_t n = D.rows();
    std::vector<BasisLabel> labels{BasisLabel::t()};
    for (std::size_t i = 1; i <= n; ++i) labels.push_back(BasisLabel::e(static_cast<unsigned>(i)));

    std::vector<StructureConstant> constants;
    for (std::size_t col = 0; col < n; ++col)
        for (std::size_t row = 0; row < n; ++row)
            if (!D(row, col).is_zero()) constants.push_back({0, col + 1, row + 1, D(row, col)});
    return LieAlgebra(std::move(labels), std::move(constants));
}

LieAlgebra cotangent(const LieAlgebra& L) {
    const std::size_t m = L.dim();
    std::vector<BasisLabel> labels = L.labels();
    for (const auto& l : L.labels()) labels.push_back(BasisLabel::generic(l.str() + "*"));

    std::vector<StructureConstant> constants = L.constants();
    // [x_i, theta^a] = -sum_b c_{ib}^a theta^b
    for (const auto& sc : L.constants()) {
        // c_{ij}^k contributes to [x_i, theta^k] (coefficient on theta^j) and,
        // through c_{ji}^k = -c, to [x_j, theta^k] (coefficient on theta^i).
        constants.push_back({sc.i, m + sc.k, m + sc.j, -sc.c});
        constants.push_back({sc.j, m + sc.k, m + sc.i, sc.c});
    }
    return LieAlgebra(std::move(labels), std::move(constants));
}

std::vector<std::size_t> TgBasis::alternate_order() const {
    std::vector<std::size_t> pos(dim());
    pos[0] = t();
    for (unsigned i = 1; i <= n; ++i) {
        pos[i] = e(i);
        pos[n + i] = f(i);
    }
    pos[2 * std::size_t{n} + 1] = z();
    return pos;
}

LieAlgebra build_tg(unsigned n) {
    if (n < 2) throw SizeTooSmall("T*g needs n >= 2");
    const TgBasis B{n};
    std::vector<BasisLabel> labels(B.dim());
    labels[B.z()] = BasisLabel::z();
    labels[B.t()] = BasisLabel::t();
    for (unsigned i = 1; i <= n; ++i) {
        labels[B.e(i)] = BasisLabel::e(i);
        labels[B.f(i)] = BasisLabel::f(i);
    }

    std::vector<StructureConstant> constants;
    for (unsigned i = 1; i < n; ++i) {
        constants.push_back({B.t(), B.e(i + 1), B.e(i), 1});
        constants.push_back({B.t(), B.f(i + 1), B.f(i), -1});
        constants.push_back({B.e(i + 1), B.f(n - i + 1), B.z(), 1});
    }
    return LieAlgebra(std::move(labels), std::move(constants));
}

LieAlgebra permute_basis(const LieAlgebra& L, std::span<const std::size_t> perm) {
    if (perm.size() != L.dim()) throw DimensionMismatch("permutation length differs from dimension");
    std::vector<BasisLabel> labels(L.dim());
    std::vector<bool> seen(L.dim(), false);
    for (std::size_t i = 0; i < L.dim(); ++i) {
        if (perm[i] >= L.dim() || seen[perm[i]]) throw DimensionMismatch("not a permutation");
        seen[perm[i]] = true;
        labels[perm[i]] = L.labels()[i];
    }
    std::vector<StructureConstant> constants;
    for (const auto& sc : L.constants()) constants.push_back({perm[sc.i], perm[sc.j], perm[sc.k], sc.c});
    return LieAlgebra(std::move(labels), std::move(constants));
}

Matrix permute_matrix(const Matrix& m, std::span<const std::size_t> perm) {
    if (!m.is_square() || perm.size() != m.rows()) throw DimensionMismatch("permutation does not fit matrix");
    Matrix out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out(perm[r], perm[c]) = m(r, c);
    return out;
}

Subspace Subspace::span(const std::vector<Vector>& vectors, std::size_t ambient_dim) {
    Subspace s(ambient_dim);
    if (vectors.empty()) return s;
    const auto ech = reduced_echelon(Matrix::from_rows(vectors, ambient_dim));
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) s.basis_.push_back(ech.reduced.row(r));
    return s;
}

Subspace Subspace::whole(std::size_t ambient_dim) {
    std::vector<Vector> units;
    for (std::size_t i = 0; i < ambient_dim; ++i) units.push_back(unit_vector(ambient_dim, i));
    return span(units, ambient_dim);
}

bool Subspace::contains(std::span<const Scalar> v) const {
    if (v.size() != ambient_) throw DimensionMismatch("vector does not live in the ambient space");
    std::vector<Vector> rows = basis_;
    rows.emplace_back(v.begin(), v.end());
    return rank(Matrix::from_rows(rows, ambient_)) == basis_.size();
}

bool Subspace::contains(const Subspace& other) const {
    for (const auto& v : other.basis_)
        if (!contains(v)) return false;
    return true;
}

Subspace bracket_span(const LieAlgebra& L, const Subspace& U, const Subspace& V) {
    std::vector<Vector> brackets;
    for (const auto& u : U.basis())
        for (const auto& v : V.basis()) {
            auto b = bracket(L, u, v);
            if (!is_zero(b)) brackets.push_back(std::move(b));
        }
    return Subspace::span(brackets, L.dim());
}

std::vector<Subspace> lower_central_series(const LieAlgebra& L) {
    const Subspace whole = Subspace::whole(L.dim());
    std::vector<Subspace> series{whole};
    for (std::size_t step = 0; step <= L.dim(); ++step) {
        if (series.back().dim() == 0) break;
        Subspace next = bracket_span(L, series.back(), whole);
        if (next == series.back()) break;
        series.push_back(std::move(next));
    }
    return series;
}

Subspace center(const LieAlgebra& L) {
    const std::size_t n = L.dim();
    // x is central iff [x, x_j] = 0 for every j: stack the maps x -> [x, x_j]
    Matrix stacked(n * n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i)
            for (const auto& [k, c] : L.basis_bracket(i, j)) stacked(j * n + k, i) += c;
    return Subspace::span(kernel(stacked), n);
}

std::optional<unsigned> nilpotency_step(const LieAlgebra& L) {
    const auto series = lower_central_series(L);
    if (series.back().dim() != 0) return std::nullopt;
    return static_cast<unsigned>(series.size() - 1);
}

}  // namespace cotlsa
