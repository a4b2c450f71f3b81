#include "cotlsa/symplectic.hpp"

#include <stdexcept>

#include "cotlsa/errors.hpp"

namespace cotlsa {

TwoForm::TwoForm(LieAlgebra base, Matrix omega) : base_(std::move(base)), omega_(std::move(omega)) {
    const std::size_t n = base_.dim();
    if (omega_.rows() != n || omega_.cols() != n) throw DimensionMismatch("form matrix does not match algebra dimension");
    for (std::size_t i = 0; i < n; ++i) {
        if (!omega_(i, i).is_zero()) throw ParseError("form has a nonzero diagonal entry");
        for (std::size_t j = i + 1; j < n; ++j)
            if (omega_(i, j) != -omega_(j, i)) throw ParseError("form matrix is not skew");
    }
}

TwoForm TwoForm::from_upper(LieAlgebra base, const std::vector<FormEntry>& upper) {
    const std::size_t n = base.dim();
    Matrix m(n, n);
    for (const auto& e : upper) {
        if (e.i >= e.j || e.j >= n) throw ParseError("form entries need i < j < dim");
        if (!m(e.i, e.j).is_zero()) throw ParseError("duplicate form entry");
        m(e.i, e.j) = e.w;
        m(e.j, e.i) = -e.w;
    }
    return TwoForm(std::move(base), std::move(m));
}

Scalar TwoForm::evaluate(std::span<const Scalar> x, std::span<const Scalar> y) const {
    const Vector wy = omega_.apply(y);
    Scalar s;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!x[i].is_zero()) s += x[i] * wy[i];
    return s;
}

void validate(const LambdaParams& p) {
    if (p.n < 2) throw SizeTooSmall("lambda forms need n >= 2");
    if (p.lambda.is_integer()) throw IntegerLambda("lambda must not be an integer, got " + p.lambda.str());
    for (const auto& l : lambda_sequence(p))
        if (l.is_zero()) throw ZeroLambdaI("some lambda_i vanishes");
}

std::vector<Scalar> lambda_sequence(const LambdaParams& p) {
    std::vector<Scalar> out;
    for (unsigned i = 1; i <= p.n; ++i) out.push_back(p.lambda - Scalar(i) + 1);
    return out;
}

FamilyParams family_params(const LambdaParams& p) {
    const Scalar n(p.n);
    return {p.n, (p.lambda - 1) / p.lambda, -(p.lambda - n + 2) / (p.lambda - n + 1)};
}

bool is_nondegenerate(const TwoForm& w) { return !determinant(w.matrix()).is_zero(); }

VerificationReport check_closed(const TwoForm& w) {
    VerificationReport report("check_closed");
    const LieAlgebra& L = w.base();
    const std::size_t n = w.dim();
    // w(x_a, [x_b, x_c]) from the sparse bracket
    auto term = [&](std::size_t a, std::size_t b, std::size_t c) {
        Scalar s;
        for (const auto& [k, coef] : L.basis_bracket(b, c)) s += coef * w(a, k);
        return s;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                const Scalar s = term(i, j, k) + term(j, k, i) + term(k, i, j);
                if (!s.is_zero()) report.record({"closed", {i, j, k}, {s}, {Scalar(0)}});
            }
    return report;
}

TwoForm build_omega_from_sequence(const std::vector<Scalar>& lambdas) {
    const unsigned n = static_cast<unsigned>(lambdas.size());
    if (n < 2) throw SizeTooSmall("lambda forms need n >= 2");
    const TgBasis B{n};
    std::vector<FormEntry> upper;
    auto put = [&](std::size_t a, std::size_t b, const Scalar& v) {
        if (a < b) upper.push_back({a, b, v});
        else upper.push_back({b, a, -v});
    };
    put(B.t(), B.z(), Scalar(1));
    for (unsigned i = 1; i <= n; ++i) put(B.e(i), B.f(n - i + 1), lambdas[i - 1]);
    return TwoForm::from_upper(build_tg(n), upper);
}

TwoForm build_omega_lambda(const LambdaParams& p) {
    validate(p);
    return build_omega_from_sequence(lambda_sequence(p));
}

Matrix phi_omega(const TwoForm& w) { return w.matrix().transpose(); }

LsaProduct induce_lsa(const TwoForm& w) {
    const Matrix phi = phi_omega(w);
    const auto phi_inv = inverse(phi);
    if (!phi_inv) throw Degenerate("form is degenerate");
    const auto closed = check_closed(w);
    if (!closed.passed) throw NotClosed("form is not closed");

    const LieAlgebra& L = w.base();
    const std::size_t n = w.dim();
    std::vector<ProductEntry> entries;
    for (std::size_t i = 0; i < n; ++i) {
        const Matrix ad_star = Scalar(-1) * L.ad_basis(i).transpose();
        const Matrix left = *phi_inv * ad_star * phi;
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (!left(k, j).is_zero()) entries.push_back({i, j, k, left(k, j)});
    }
    LsaProduct S(L, std::move(entries));
    if (!check_left_symmetric(S).passed) throw std::logic_error("induced product is not left-symmetric");
    return S;
}

VerificationReport check_induced_identity(const TwoForm& w, const LsaProduct& S) {
    VerificationReport report("check_induced_identity");
    const LieAlgebra& L = w.base();
    const std::size_t n = w.dim();
    if (S.dim() != n) throw DimensionMismatch("product and form differ in dimension");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Scalar lhs;
                for (const auto& [m, p] : S.basis_product(i, j)) lhs += p * w(m, k);
                Scalar rhs;
                for (const auto& [m, c] : L.basis_bracket(i, k)) rhs += c * w(j, m);
                if (!(lhs + rhs).is_zero()) report.record({"induced", {i, j, k}, {lhs}, {-rhs}});
            }
    return report;
}

VerificationReport check_induced_matches_family(const LambdaParams& p) {
    VerificationReport report("check_induced_matches_family");
    validate(p);
    const FamilyParams fp = family_params(p);
    const auto cond = check_conditions(fp.n, fp.alpha, fp.beta);
    if (!cond.passed) {
        report.record({"conditions", {}, {fp.alpha, fp.beta}, {}});
        return report;
    }
    const LsaProduct induced = induce_lsa(build_omega_lambda(p));
    const LsaProduct family = build_delta(fp);
    const std::size_t n = induced.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vector a = zero_vector(n), b = zero_vector(n);
            for (const auto& [k, v] : induced.basis_product(i, j)) a[k] = v;
            for (const auto& [k, v] : family.basis_product(i, j)) b[k] = v;
            if (a != b) report.record({"tensor", {i, j}, std::move(a), std::move(b)});
        }
    return report;
}

TwoForm pullback(const Matrix& phi, const TwoForm& w) {
    if (phi.rows() != w.dim() || phi.cols() != w.dim()) throw DimensionMismatch("map and form differ in dimension");
    return TwoForm(w.base(), phi.transpose() * w.matrix() * phi);
}

VerificationReport verify_homothety(const TwoForm& w, const TwoForm& w2, const HomothetyCertificate& cert) {
    if (w.dim() != w2.dim() || cert.phi.rows() != w.dim() || cert.phi.cols() != w.dim())
        throw DimensionMismatch("forms and certificate differ in dimension");
    VerificationReport report("verify_homothety");
    const std::size_t n = w.dim();
    if (cert.c.is_zero()) report.record({"scale", {}, {cert.c}, {}});
    if (determinant(cert.phi).is_zero()) report.record({"invertible", {}, {}, {}});
    report.merge(check_lie_homomorphism(w.base(), w2.base(), cert.phi));

    const Matrix pulled = cert.phi.transpose() * w2.matrix() * cert.phi;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const Scalar want = cert.c * w(i, j);
            if (pulled(i, j) != want) report.record({"pullback", {i, j}, {pulled(i, j)}, {want}});
        }

    if (report.passed) report.merge(verify_lsa_isomorphism(induce_lsa(w), induce_lsa(w2), cert.phi));
    return report;
}

Matrix build_case_ii_symplecto(unsigned n) {
    if (n < 2) throw SizeTooSmall("symplectomorphism needs n >= 2");
    const TgBasis B{n};
    Matrix phi(B.dim(), B.dim());
    auto send = [&](std::size_t from, std::size_t to, long sign_exp) { phi(to, from) = sign_power(sign_exp); };
    send(B.t(), B.t(), 0);
    send(B.z(), B.z(), n);
    for (unsigned i = 1; i <= n; ++i) {
        send(B.e(i), B.f(i), n - i + 1);
        send(B.f(i), B.e(i), n - i);
    }
    return phi;
}

EquivalenceVerdict symplectic_equivalence_predicate(const LambdaParams& p, const LambdaParams& q) {
    if (p.n != q.n) throw DimensionMismatch("forms over different T*g");
    validate(p);
    validate(q);
    const std::size_t dim = TgBasis{p.n}.dim();
    if (p.lambda == q.lambda)
        return {EquivalenceResult::EquivalentCaseI, Matrix::identity(dim), Scalar(1), "identity map"};
    if (p.lambda + q.lambda == Scalar(p.n) - 1) {
        HomothetyCertificate cert{build_case_ii_symplecto(p.n), sign_power(p.n)};
        const auto check = verify_homothety(build_omega_lambda(p), build_omega_lambda(q), cert);
        if (!check.passed) throw std::logic_error("case II homothety failed verification");
        return {EquivalenceResult::EquivalentCaseII, std::move(cert.phi), cert.c, "signed swap of e_j and f_j"};
    }
    return {EquivalenceResult::NotEquivalent, std::nullopt, std::nullopt, kNecessityTrustedNote};
}

bool in_set_B(const LambdaParams& p) {
    if (p.lambda.is_integer()) return false;
    return p.lambda > Scalar(static_cast<long>(p.n) - 1, 2);
}

Matrix dual_differential(const LieAlgebra& L, std::size_t k) {
    const std::size_t n = L.dim();
    if (k >= n) throw DimensionMismatch("dual index out of range");
    Matrix d(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (const auto& [m, c] : L.basis_bracket(i, j))
                if (m == k) d(i, j) = -c;
    return d;
}

}  // namespace cotlsa
