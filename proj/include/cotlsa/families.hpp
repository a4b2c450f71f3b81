#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cotlsa/algebra.hpp"
#include "cotlsa/lsa.hpp"
#include "cotlsa/matrix.hpp"
#include "cotlsa/report.hpp"
#include "cotlsa/scalar.hpp"

namespace cotlsa {

/// Parameters (n, alpha, beta) of the product family on T*g.
struct FamilyParams {
    unsigned n = 2;
    Scalar alpha;
    Scalar beta;

    friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
};

/// Which admissibility inequality failed.
enum class Admissibility {
    AlphaChain,  // k(alpha-1)+1 != 0
    BetaChain,   // k(beta+1)-1 != 0
    Coupling,    // n(alpha-1)(beta+1) - alpha + beta + 2 != 0
};

struct ConditionReport {
    bool passed = true;
    std::optional<Admissibility> clause;
    unsigned k = 0;  // offending k for the chain conditions
    std::string message;
};

/// Checks the chain conditions for k = 1..n and the coupling condition,
/// reporting the first violation found in that order.
ConditionReport check_conditions(unsigned n, const Scalar& alpha, const Scalar& beta);

/// alpha_i, beta_i (i = 1..n) and gamma_i (i = 1..n-1), stored 0-based.
struct SequenceTriple {
    std::vector<Scalar> alphas;
    std::vector<Scalar> betas;
    std::vector<Scalar> gammas;

    unsigned n() const { return static_cast<unsigned>(alphas.size()); }
    const Scalar& alpha(unsigned i) const { return alphas.at(i - 1); }
    const Scalar& beta(unsigned i) const { return betas.at(i - 1); }
    const Scalar& gamma(unsigned i) const { return gammas.at(i - 1); }
};

/// (i(alpha-1)+1) / ((alpha-1)(i-1)+1)
Scalar alpha_closed_form(const Scalar& alpha, unsigned i);
/// (i(beta+1)-1) / (-(beta+1)(i-1)+1)
Scalar beta_closed_form(const Scalar& beta, unsigned i);
/// (alpha-1)((n-i)(beta+1)-1) / (n(alpha-1)(beta+1) - (alpha-1) + beta + 1)
Scalar gamma_closed_form(const FamilyParams& p, unsigned i);

/// The other expression for gamma_i, in terms of alpha_i and beta_{n-i}:
/// (alpha_i beta_{n-i} - beta_{n-i}) / (2 alpha_i beta_{n-i} + alpha_i - beta_{n-i}).
/// nullopt when that denominator vanishes.
std::optional<Scalar> gamma_from_sequences(const SequenceTriple& seq, unsigned i);

/// Throws ConditionViolation when the parameters are not admissible.
SequenceTriple compute_sequences(const FamilyParams& p);

/// The six product rules on T*g for i = 1..n-1, everything else zero.
LsaProduct build_delta(const FamilyParams& p);

/// Same rules from explicit sequences; lets callers perturb single values.
LsaProduct build_delta_from_sequences(const SequenceTriple& seq);

/// The l-commutator relations that make the family left-symmetric:
/// [l_t, l_{e_{i+1}}] = l_{e_i}, [l_t, l_{f_{i+1}}] = -l_{f_i},
/// [l_{e_{i+1}}, l_{f_{n-i+1}}] = l_z, and [l_{e_i}, l_{f_j}] = 0 for i+j != n+2.
/// S must live on build_tg(n).
VerificationReport check_translation_relations(const LsaProduct& S, unsigned n);

/// Hypotheses of the rigidity classification: alpha_i != 1/2 and
/// beta_i != -1/2 for i = 1..n, alpha_{n-1} not in {0, 1},
/// beta_{n-1} not in {0, -1}.
ConditionReport check_rigidity_assumptions(const FamilyParams& p);

enum class EquivalenceResult { EquivalentCaseI, EquivalentCaseII, NotEquivalent, AssumptionsViolated };
std::string to_string(EquivalenceResult r);

struct EquivalenceVerdict {
    EquivalenceResult result = EquivalenceResult::NotEquivalent;
    std::optional<Matrix> certificate;
    std::optional<Scalar> scale;  // homothety factor, symplectic comparisons only
    std::string note;
};

/// Text attached to every NotEquivalent verdict.
extern const char* const kNecessityTrustedNote;

/// Decides whether two family members are isomorphic: case I is equal
/// parameters, case II is alpha_i = -beta'_i and beta_i = -alpha'_i for
/// i = 1..n-1. Case II carries a certificate already checked with
/// verify_lsa_isomorphism. Throws DimensionMismatch on different n and
/// ConditionViolation on inadmissible parameters.
EquivalenceVerdict lsa_equivalence_predicate(const FamilyParams& p, const FamilyParams& q);

/// True when alpha_i = -beta'_i and beta_i = -alpha'_i for i = 1..n-1.
bool swapped_sequences(const SequenceTriple& a, const SequenceTriple& b);

/// z -> (-1)^n z, e_j -> (-1)^{n-j+1} f_j, f_j -> (-1)^{n-j} e_j, t -> t.
Matrix build_case_ii_iso(unsigned n);

enum class GammaComplement { Pass, Fail, NotApplicable };
std::string to_string(GammaComplement g);

/// gamma'_{n-i} + gamma_i = 1 for i = 1..n-1; NotApplicable unless the
/// sequences are swapped in the case II sense.
GammaComplement check_gamma_complement(const SequenceTriple& seq, const SequenceTriple& other);

/// alpha > 1, beta > 1 and the coupling condition holds.
bool in_set_A(const FamilyParams& p);

}  // namespace cotlsa
