#include "cotlsa/lsa.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "cotlsa/errors.hpp"

namespace cotlsa {

LsaProduct::LsaProduct(LieAlgebra base, std::vector<ProductEntry> entries)
    : base_(std::move(base)), table_(base_.dim() * base_.dim()) {
    const std::size_t n = base_.dim();
    for (const auto& e : entries)
        if (e.i >= n || e.j >= n || e.k >= n) throw DimensionMismatch("product index out of range");
    std::erase_if(entries, [](const ProductEntry& e) { return e.p.is_zero(); });
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return std::tie(a.i, a.j, a.k) < std::tie(b.i, b.j, b.k); });
    for (std::size_t q = 1; q < entries.size(); ++q) {
        const auto& a = entries[q - 1];
        const auto& b = entries[q];
        if (a.i == b.i && a.j == b.j && a.k == b.k) throw ParseError("duplicate product entry");
    }
    entries_ = std::move(entries);
    for (const auto& e : entries_) table_[e.i * n + e.j].emplace_back(e.k, e.p);
}

Matrix LsaProduct::left_basis(std::size_t i) const {
    Matrix m(dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j)
        for (const auto& [k, p] : basis_product(i, j)) m(k, j) = p;
    return m;
}

Matrix LsaProduct::right_basis(std::size_t i) const {
    Matrix m(dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j)
        for (const auto& [k, p] : basis_product(j, i)) m(k, j) = p;
    return m;
}

Vector lsa_product(const LsaProduct& S, std::span<const Scalar> x, std::span<const Scalar> y) {
    if (x.size() != S.dim() || y.size() != S.dim())
        throw DimensionMismatch("vector length differs from algebra dimension");
    Vector out(S.dim());
    for (std::size_t i = 0; i < S.dim(); ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < S.dim(); ++j) {
            if (y[j].is_zero()) continue;
            const Scalar w = x[i] * y[j];
            for (const auto& [k, p] : S.basis_product(i, j)) out[k] += w * p;
        }
    }
    return out;
}

Matrix left_translation(const LsaProduct& S, std::span<const Scalar> x) {
    if (x.size() != S.dim()) throw DimensionMismatch("vector length differs from algebra dimension");
    Matrix m(S.dim(), S.dim());
    for (std::size_t i = 0; i < S.dim(); ++i)
        if (!x[i].is_zero()) m += x[i] * S.left_basis(i);
    return m;
}

Matrix right_translation(const LsaProduct& S, std::span<const Scalar> x) {
    if (x.size() != S.dim()) throw DimensionMismatch("vector length differs from algebra dimension");
    Matrix m(S.dim(), S.dim());
    for (std::size_t i = 0; i < S.dim(); ++i)
        if (!x[i].is_zero()) m += x[i] * S.right_basis(i);
    return m;
}

namespace {

std::vector<Matrix> all_left_translations(const LsaProduct& S) {
    std::vector<Matrix> ls;
    ls.reserve(S.dim());
    for (std::size_t i = 0; i < S.dim(); ++i) ls.push_back(S.left_basis(i));
    return ls;
}

// l_{v} as a combination of precomputed basis translations
Matrix combine(const std::vector<Matrix>& ls, std::span<const Scalar> v) {
    Matrix m(ls.front().rows(), ls.front().cols());
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) m += v[i] * ls[i];
    return m;
}

Vector dense(const SparseVector& sv, std::size_t n) {
    Vector v(n);
    for (const auto& [k, c] : sv) v[k] += c;
    return v;
}

}  // namespace

VerificationReport check_associator_symmetry(const LsaProduct& S) {
    VerificationReport report("check_associator_symmetry");
    const std::size_t n = S.dim();
    const auto ls = all_left_translations(S);
    // column k of l_i l_j - l_{x_i.x_j} is the associator (x_i, x_j, x_k)
    std::vector<Matrix> assoc(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            assoc[i * n + j] = ls[i] * ls[j] - combine(ls, dense(S.basis_product(i, j), n));

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const auto& a = assoc[i * n + j];
            const auto& b = assoc[j * n + i];
            if (a == b) continue;
            for (std::size_t k = 0; k < n; ++k) {
                Vector lhs = a.column(k), rhs = b.column(k);
                if (lhs != rhs) report.record({"associator", {i, j, k}, std::move(lhs), std::move(rhs)});
            }
        }
    return report;
}

VerificationReport check_commutator_bracket(const LsaProduct& S) {
    VerificationReport report("check_commutator_bracket");
    const std::size_t n = S.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Vector lhs = sub(dense(S.basis_product(i, j), n), dense(S.basis_product(j, i), n));
            Vector rhs = dense(S.base().basis_bracket(i, j), n);
            if (lhs != rhs) report.record({"commutator", {i, j}, std::move(lhs), std::move(rhs)});
        }
    return report;
}

VerificationReport check_left_symmetric(const LsaProduct& S) {
    VerificationReport report = check_associator_symmetry(S);
    report.check = "check_left_symmetric";
    report.merge(check_commutator_bracket(S));
    return report;
}

VerificationReport check_left_hom(const LsaProduct& S) {
    VerificationReport report("check_left_hom");
    const std::size_t n = S.dim();
    const auto ls = all_left_translations(S);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const Matrix lhs = commutator(ls[i], ls[j]);
            const Matrix rhs = combine(ls, dense(S.base().basis_bracket(i, j), n));
            if (lhs == rhs) continue;
            for (std::size_t k = 0; k < n; ++k) {
                Vector a = lhs.column(k), b = rhs.column(k);
                if (a != b) {
                    report.record({"left_hom", {i, j}, std::move(a), std::move(b)});
                    break;
                }
            }
        }
    return report;
}

std::string to_string(CompletenessVerdict v) {
    switch (v) {
        case CompletenessVerdict::CompleteByTriangularization: return "CompleteByTriangularization";
        case CompletenessVerdict::CompleteByTraceCriterion: return "CompleteByTraceCriterion";
        case CompletenessVerdict::NotComplete: return "NotComplete";
    }
    return "NotComplete";
}

namespace {

// t, e_n, f_n, ..., e_1, f_1, z when the base carries exactly the T*g labels
std::optional<std::vector<std::size_t>> family_ordering(const LieAlgebra& L) {
    if (L.dim() < 6 || L.dim() % 2 != 0) return std::nullopt;
    const auto n = static_cast<unsigned>((L.dim() - 2) / 2);
    std::vector<std::size_t> order;
    auto push = [&](const BasisLabel& label) {
        auto idx = L.index_of(label);
        if (!idx) return false;
        order.push_back(*idx);
        return true;
    };
    if (!push(BasisLabel::t())) return std::nullopt;
    for (unsigned i = n; i >= 1; --i)
        if (!push(BasisLabel::e(i)) || !push(BasisLabel::f(i))) return std::nullopt;
    if (!push(BasisLabel::z())) return std::nullopt;
    return order;
}

}  // namespace

std::vector<std::vector<std::size_t>> candidate_orderings(const LsaProduct& S) {
    std::vector<std::vector<std::size_t>> out;
    if (auto fam = family_ordering(S.base())) out.push_back(std::move(*fam));

    // depth of a basis vector: last term of the lower central series containing it
    const auto series = lower_central_series(S.base());
    const std::size_t n = S.dim();
    std::vector<std::size_t> depth(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const auto e = unit_vector(n, i);
        for (std::size_t d = 0; d < series.size(); ++d)
            if (series[d].contains(e)) depth[i] = d;
    }
    std::vector<std::size_t> by_depth(n);
    std::iota(by_depth.begin(), by_depth.end(), 0);
    std::stable_sort(by_depth.begin(), by_depth.end(), [&](auto a, auto b) { return depth[a] < depth[b]; });
    out.push_back(by_depth);

    std::vector<std::size_t> by_depth_rev(n);
    std::iota(by_depth_rev.rbegin(), by_depth_rev.rend(), 0);
    std::stable_sort(by_depth_rev.begin(), by_depth_rev.end(), [&](auto a, auto b) { return depth[a] < depth[b]; });
    out.push_back(by_depth_rev);
    return out;
}

bool right_translations_strictly_triangular(const LsaProduct& S, std::span<const std::size_t> order) {
    const std::size_t n = S.dim();
    if (order.size() != n) throw DimensionMismatch("ordering length differs from dimension");
    std::vector<std::size_t> pos(n);
    for (std::size_t p = 0; p < n; ++p) pos[order[p]] = p;
    // r_{x_j}(x_i) = x_i . x_j must land strictly after x_i
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (const auto& [k, p] : S.basis_product(i, j))
                if (pos[k] <= pos[i]) return false;
    return true;
}

std::optional<std::vector<std::size_t>> find_triangular_ordering(const LsaProduct& S) {
    for (auto& order : candidate_orderings(S))
        if (right_translations_strictly_triangular(S, order)) return std::move(order);
    return std::nullopt;
}

PolyMatrix generic_right_translation(const LsaProduct& S) {
    const std::size_t n = S.dim();
    PolyMatrix r(n, n, n);
    for (const auto& e : S.entries()) {
        // x_i . (x_j X_j) contributes X_j p to row k, column i
        r(e.k, e.i) += e.p * MultiPoly::variable(n, e.j);
    }
    return r;
}

namespace {

// A rational point where p does not vanish, fixing one variable at a time to
// the smallest non-negative integer that keeps the remainder nonzero.
Vector nonvanishing_point(MultiPoly p) {
    Vector point(p.nvars());
    for (std::size_t v = 0; v < p.nvars(); ++v) {
        const unsigned bound = p.degree_in(v);
        for (unsigned c = 0; c <= bound; ++c) {
            MultiPoly q = p.substitute(v, static_cast<long>(c));
            if (!q.is_zero()) {
                point[v] = static_cast<long>(c);
                p = std::move(q);
                break;
            }
        }
    }
    return point;
}

}  // namespace

CompletenessResult trace_criterion(const LsaProduct& S) {
    const std::size_t n = S.dim();
    const PolyMatrix r = generic_right_translation(S);
    PolyMatrix p = r;
    for (unsigned k = 1; k <= n; ++k) {
        if (p.is_zero()) break;
        const MultiPoly tr = p.trace();
        if (!tr.is_zero()) {
            CompletenessWitness w;
            w.point = nonvanishing_point(tr);
            w.power = k;
            w.trace_value = tr.evaluate(w.point);
            return {CompletenessVerdict::NotComplete, std::nullopt, std::move(w)};
        }
        if (k < n) p = p * r;
    }
    return {CompletenessVerdict::CompleteByTraceCriterion, std::nullopt, std::nullopt};
}

CompletenessResult check_complete(const LsaProduct& S) {
    const auto axioms = check_left_symmetric(S);
    if (!axioms.passed) throw AxiomsNotVerified("product is not left-symmetric; completeness undefined");
    if (auto order = find_triangular_ordering(S))
        return {CompletenessVerdict::CompleteByTriangularization, std::move(order), std::nullopt};
    return trace_criterion(S);
}

VerificationReport verify_lsa_isomorphism(const LsaProduct& S, const LsaProduct& target, const Matrix& phi) {
    if (S.dim() != target.dim() || phi.rows() != S.dim() || phi.cols() != S.dim())
        throw DimensionMismatch("isomorphism certificate has the wrong shape");
    VerificationReport report("verify_lsa_isomorphism");
    const std::size_t n = S.dim();
    if (determinant(phi).is_zero()) report.record({"invertible", {}, {}, {}});

    report.merge(check_lie_homomorphism(S.base(), target.base(), phi));

    std::vector<Vector> images;
    for (std::size_t i = 0; i < n; ++i) images.push_back(phi.column(i));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vector lhs = phi.apply(dense(S.basis_product(i, j), n));
            Vector rhs = lsa_product(target, images[i], images[j]);
            if (lhs != rhs) report.record({"product", {i, j}, std::move(lhs), std::move(rhs)});
        }
    return report;
}

}  // namespace cotlsa
