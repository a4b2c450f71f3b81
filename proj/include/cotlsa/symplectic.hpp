#pragma once

#include <string>
#include <vector>

#include "cotlsa/algebra.hpp"
#include "cotlsa/families.hpp"
#include "cotlsa/lsa.hpp"
#include "cotlsa/matrix.hpp"
#include "cotlsa/report.hpp"
#include "cotlsa/scalar.hpp"

namespace cotlsa {

/// w(x_i, x_j) = w with i < j.
struct FormEntry {
    std::size_t i;
    std::size_t j;
    Scalar w;
};

/// Alternating bilinear form on a Lie algebra, omega(i, j) = w(x_i, x_j).
class TwoForm {
public:
    /// Throws DimensionMismatch on a wrong shape and ParseError when the
    /// matrix is not exactly skew.
    TwoForm(LieAlgebra base, Matrix omega);

    /// Fills omega(j, i) = -w for every (i, j, w) given with i < j.
    static TwoForm from_upper(LieAlgebra base, const std::vector<FormEntry>& upper);

    const LieAlgebra& base() const { return base_; }
    const Matrix& matrix() const { return omega_; }
    std::size_t dim() const { return base_.dim(); }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return omega_(i, j); }

    Scalar evaluate(std::span<const Scalar> x, std::span<const Scalar> y) const;

private:
    LieAlgebra base_;
    Matrix omega_;
};

struct LambdaParams {
    unsigned n = 2;
    Scalar lambda;

    friend bool operator==(const LambdaParams&, const LambdaParams&) = default;
};

/// Throws SizeTooSmall, IntegerLambda or ZeroLambdaI.
void validate(const LambdaParams& p);

/// lambda_i = lambda - i + 1 for i = 1..n, stored 0-based.
std::vector<Scalar> lambda_sequence(const LambdaParams& p);

/// alpha = (lambda-1)/lambda, beta = -(lambda-n+2)/(lambda-n+1).
FamilyParams family_params(const LambdaParams& p);

bool is_nondegenerate(const TwoForm& w);

/// w(x_i,[x_j,x_k]) + w(x_j,[x_k,x_i]) + w(x_k,[x_i,x_j]) over all i<j<k.
VerificationReport check_closed(const TwoForm& w);

/// t*^z* + sum lambda_i e_i*^f_{n-i+1}* on build_tg(n).
TwoForm build_omega_lambda(const LambdaParams& p);

/// Same form from an explicit lambda sequence, no validation beyond length.
TwoForm build_omega_from_sequence(const std::vector<Scalar>& lambdas);

/// Matrix of Phi: x -> w(x, .), columns are the covectors w(x_j, .).
Matrix phi_omega(const TwoForm& w);

/// x . y = Phi^-1 ad*_x Phi y. Throws Degenerate or NotClosed. The result
/// is re-checked for left-symmetry and a failure is a logic_error.
LsaProduct induce_lsa(const TwoForm& w);

/// w(x_i . x_j, x_k) + w(x_j, [x_i, x_k]) == 0 over all basis triples,
/// evaluated straight from the product table.
VerificationReport check_induced_identity(const TwoForm& w, const LsaProduct& S);

/// induce_lsa(build_omega_lambda(p)) against build_delta(family_params(p)),
/// entry by entry. Witness kind "tensor" with indices {i, j}; a condition
/// failure on the derived (alpha, beta) is witness kind "conditions".
VerificationReport check_induced_matches_family(const LambdaParams& p);

struct HomothetyCertificate {
    Matrix phi;
    Scalar c{1};
};

/// phi^T w phi.
TwoForm pullback(const Matrix& phi, const TwoForm& w);

/// phi is an invertible Lie map of the bases, c != 0, pullback(phi, w2) = c w,
/// and phi intertwines the induced products of w and w2.
VerificationReport verify_homothety(const TwoForm& w, const TwoForm& w2, const HomothetyCertificate& cert);

/// t -> t, z -> (-1)^n z, e_i -> (-1)^{n-i+1} f_i, f_i -> (-1)^{n-i} e_i.
Matrix build_case_ii_symplecto(unsigned n);

/// Case I: lambda = lambda'. Case II: lambda + lambda' = n - 1, certificate
/// with c = (-1)^n already verified. Throws DimensionMismatch on different n.
EquivalenceVerdict symplectic_equivalence_predicate(const LambdaParams& p, const LambdaParams& q);

/// lambda > (n-1)/2 and lambda not an integer.
bool in_set_B(const LambdaParams& p);

/// d(x_k*) as a skew matrix: d theta(x, y) = -theta([x, y]).
Matrix dual_differential(const LieAlgebra& L, std::size_t k);

}  // namespace cotlsa
