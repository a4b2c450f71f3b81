#include "cotlsa/families.hpp"

#include <stdexcept>

#include "cotlsa/errors.hpp"

namespace cotlsa {

const char* const kNecessityTrustedNote =
    "non-isomorphism rests on the necessity direction of the published classification; it is not re-proven here";

ConditionReport check_conditions(unsigned n, const Scalar& alpha, const Scalar& beta) {
    if (n < 2) throw SizeTooSmall("family needs n >= 2");
    const Scalar a1 = alpha - 1;
    const Scalar b1 = beta + 1;
    for (unsigned k = 1; k <= n; ++k) {
        if ((Scalar(k) * a1 + 1).is_zero())
            return {false, Admissibility::AlphaChain, k,
                    "condition k(alpha-1)+1 != 0 violated at k=" + std::to_string(k)};
    }
    for (unsigned k = 1; k <= n; ++k) {
        if ((Scalar(k) * b1 - 1).is_zero())
            return {false, Admissibility::BetaChain, k,
                    "condition k(beta+1)-1 != 0 violated at k=" + std::to_string(k)};
    }
    if ((Scalar(n) * a1 * b1 - alpha + beta + 2).is_zero())
        return {false, Admissibility::Coupling, 0, "condition n(alpha-1)(beta+1) - alpha + beta + 2 != 0 violated"};
    return {};
}

Scalar alpha_closed_form(const Scalar& alpha, unsigned i) {
    const Scalar a1 = alpha - 1;
    return (Scalar(i) * a1 + 1) / (a1 * Scalar(i - 1) + 1);
}

Scalar beta_closed_form(const Scalar& beta, unsigned i) {
    const Scalar b1 = beta + 1;
    return (Scalar(i) * b1 - 1) / (-b1 * Scalar(i - 1) + 1);
}

Scalar gamma_closed_form(const FamilyParams& p, unsigned i) {
    const Scalar a1 = p.alpha - 1;
    const Scalar b1 = p.beta + 1;
    const Scalar num = a1 * (Scalar(p.n - i) * b1 - 1);
    const Scalar den = Scalar(p.n) * a1 * b1 - a1 + p.beta + 1;
    return num / den;
}

std::optional<Scalar> gamma_from_sequences(const SequenceTriple& seq, unsigned i) {
    const unsigned n = seq.n();
    if (i < 1 || i >= n) return std::nullopt;
    const Scalar& a = seq.alpha(i);
    const Scalar& b = seq.beta(n - i);
    const Scalar den = 2 * a * b + a - b;
    if (den.is_zero()) return std::nullopt;
    return (a * b - b) / den;
}

SequenceTriple compute_sequences(const FamilyParams& p) {
    const auto cond = check_conditions(p.n, p.alpha, p.beta);
    if (!cond.passed) throw ConditionViolation(cond.message);
    SequenceTriple seq;
    for (unsigned i = 1; i <= p.n; ++i) {
        seq.alphas.push_back(alpha_closed_form(p.alpha, i));
        seq.betas.push_back(beta_closed_form(p.beta, i));
    }
    for (unsigned i = 1; i < p.n; ++i) seq.gammas.push_back(gamma_closed_form(p, i));
    return seq;
}

LsaProduct build_delta_from_sequences(const SequenceTriple& seq) {
    const unsigned n = seq.n();
    if (seq.betas.size() != n || seq.gammas.size() + 1 != n) throw DimensionMismatch("inconsistent sequence lengths");
    const TgBasis B{n};
    std::vector<ProductEntry> entries;
    for (unsigned i = 1; i < n; ++i) {
        entries.push_back({B.t(), B.e(i + 1), B.e(i), seq.alpha(i)});
        entries.push_back({B.e(i + 1), B.t(), B.e(i), seq.alpha(i) - 1});
        entries.push_back({B.t(), B.f(i + 1), B.f(i), seq.beta(i)});
        entries.push_back({B.f(i + 1), B.t(), B.f(i), seq.beta(i) + 1});
        entries.push_back({B.e(i + 1), B.f(n - i + 1), B.z(), seq.gamma(i)});
        entries.push_back({B.f(n - i + 1), B.e(i + 1), B.z(), seq.gamma(i) - 1});
    }
    return LsaProduct(build_tg(n), std::move(entries));
}

LsaProduct build_delta(const FamilyParams& p) { return build_delta_from_sequences(compute_sequences(p)); }

VerificationReport check_translation_relations(const LsaProduct& S, unsigned n) {
    const TgBasis B{n};
    if (S.dim() != B.dim()) throw DimensionMismatch("product does not live on T*g of this size");
    VerificationReport report("check_translation_relations");
    const std::size_t dim = B.dim();

    auto compare = [&](const char* kind, std::size_t a, std::size_t b, const Matrix& lhs, const Matrix& rhs) {
        if (lhs == rhs) return;
        for (std::size_t k = 0; k < dim; ++k)
            if (lhs.column(k) != rhs.column(k)) {
                report.record({kind, {a, b}, lhs.column(k), rhs.column(k)});
                return;
            }
    };

    const Matrix lt = S.left_basis(B.t());
    const Matrix lz = S.left_basis(B.z());
    for (unsigned i = 1; i < n; ++i) {
        compare("t_e", B.t(), B.e(i + 1), commutator(lt, S.left_basis(B.e(i + 1))), S.left_basis(B.e(i)));
        compare("t_f", B.t(), B.f(i + 1), commutator(lt, S.left_basis(B.f(i + 1))), Scalar(-1) * S.left_basis(B.f(i)));
        compare("e_f_z", B.e(i + 1), B.f(n - i + 1),
                commutator(S.left_basis(B.e(i + 1)), S.left_basis(B.f(n - i + 1))), lz);
    }
    const Matrix zero(dim, dim);
    for (unsigned i = 1; i <= n; ++i)
        for (unsigned j = 1; j <= n; ++j) {
            if (i + j == n + 2) continue;
            compare("e_f_zero", B.e(i), B.f(j), commutator(S.left_basis(B.e(i)), S.left_basis(B.f(j))), zero);
        }
    return report;
}

ConditionReport check_rigidity_assumptions(const FamilyParams& p) {
    const auto seq = compute_sequences(p);
    const Scalar half(1, 2);
    for (unsigned i = 1; i <= p.n; ++i) {
        if (seq.alpha(i) == half) return {false, std::nullopt, i, "alpha_" + std::to_string(i) + " = 1/2"};
        if (seq.beta(i) == -half) return {false, std::nullopt, i, "beta_" + std::to_string(i) + " = -1/2"};
    }
    const unsigned m = p.n - 1;
    const Scalar& am = seq.alpha(m);
    const Scalar& bm = seq.beta(m);
    if (am.is_zero() || am == 1)
        return {false, std::nullopt, m, "alpha_" + std::to_string(m) + " = " + am.str() + " (must avoid 0 and 1)"};
    if (bm.is_zero() || bm == -1)
        return {false, std::nullopt, m, "beta_" + std::to_string(m) + " = " + bm.str() + " (must avoid 0 and -1)"};
    return {};
}

std::string to_string(EquivalenceResult r) {
    switch (r) {
        case EquivalenceResult::EquivalentCaseI: return "EquivalentCaseI";
        case EquivalenceResult::EquivalentCaseII: return "EquivalentCaseII";
        case EquivalenceResult::NotEquivalent: return "NotEquivalent";
        case EquivalenceResult::AssumptionsViolated: return "AssumptionsViolated";
    }
    return "NotEquivalent";
}

bool swapped_sequences(const SequenceTriple& a, const SequenceTriple& b) {
    if (a.n() != b.n()) return false;
    for (unsigned i = 1; i < a.n(); ++i)
        if (a.alpha(i) != -b.beta(i) || a.beta(i) != -b.alpha(i)) return false;
    return true;
}

EquivalenceVerdict lsa_equivalence_predicate(const FamilyParams& p, const FamilyParams& q) {
    if (p.n != q.n) throw DimensionMismatch("family members over different T*g");
    const auto sp = compute_sequences(p);
    const auto sq = compute_sequences(q);

    const auto ap = check_rigidity_assumptions(p);
    const auto aq = check_rigidity_assumptions(q);
    if (!ap.passed || !aq.passed) {
        EquivalenceVerdict v{EquivalenceResult::AssumptionsViolated, std::nullopt, std::nullopt, {}};
        v.note = !ap.passed ? "first parameters: " + ap.message : "second parameters: " + aq.message;
        return v;
    }

    if (p.alpha == q.alpha && p.beta == q.beta)
        return {EquivalenceResult::EquivalentCaseI, Matrix::identity(TgBasis{p.n}.dim()), std::nullopt,
                "identity map"};

    if (swapped_sequences(sp, sq)) {
        Matrix phi = build_case_ii_iso(p.n);
        const auto check = verify_lsa_isomorphism(build_delta(p), build_delta(q), phi);
        if (!check.passed) throw std::logic_error("case II certificate failed verification");
        return {EquivalenceResult::EquivalentCaseII, std::move(phi), std::nullopt, "signed swap of e_j and f_j"};
    }
    return {EquivalenceResult::NotEquivalent, std::nullopt, std::nullopt, kNecessityTrustedNote};
}

Matrix build_case_ii_iso(unsigned n) {
    if (n < 2) throw SizeTooSmall("case II map needs n >= 2");
    const TgBasis B{n};
    Matrix phi(B.dim(), B.dim());
    phi(B.z(), B.z()) = sign_power(n);
    phi(B.t(), B.t()) = 1;
    for (unsigned j = 1; j <= n; ++j) {
        phi(B.f(j), B.e(j)) = sign_power(n - j + 1);
        phi(B.e(j), B.f(j)) = sign_power(n - j);
    }
    return phi;
}

std::string to_string(GammaComplement g) {
    switch (g) {
        case GammaComplement::Pass: return "pass";
        case GammaComplement::Fail: return "fail";
        case GammaComplement::NotApplicable: return "not_applicable";
    }
    return "not_applicable";
}

GammaComplement check_gamma_complement(const SequenceTriple& seq, const SequenceTriple& other) {
    if (!swapped_sequences(seq, other)) return GammaComplement::NotApplicable;
    const unsigned n = seq.n();
    for (unsigned i = 1; i < n; ++i)
        if (other.gamma(n - i) + seq.gamma(i) != 1) return GammaComplement::Fail;
    return GammaComplement::Pass;
}

bool in_set_A(const FamilyParams& p) {
    if (!(p.alpha > 1) || !(p.beta > 1)) return false;
    const Scalar coupling = Scalar(p.n) * (p.alpha - 1) * (p.beta + 1) - p.alpha + p.beta + 2;
    return !coupling.is_zero();
}

}  // namespace cotlsa
