#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cotlsa/matrix.hpp"
#include "cotlsa/report.hpp"
#include "cotlsa/scalar.hpp"

namespace cotlsa {

/// Name of a basis vector. The cotangent algebras use t, z, e_i and f_i;
/// anything else is a free-form generic label.
struct BasisLabel {
    enum class Kind { t, e, f, z, generic };

    Kind kind = Kind::generic;
    unsigned index = 0;
    std::string name;

    static BasisLabel t() { return {Kind::t, 0, {}}; }
    static BasisLabel z() { return {Kind::z, 0, {}}; }
    static BasisLabel e(unsigned i) { return {Kind::e, i, {}}; }
    static BasisLabel f(unsigned i) { return {Kind::f, i, {}}; }
    static BasisLabel generic(std::string n) { return {Kind::generic, 0, std::move(n)}; }

    /// "t", "z", "e3", "f1", or the generic name.
    std::string str() const;
    static BasisLabel parse(std::string_view text);

    friend bool operator==(const BasisLabel&, const BasisLabel&) = default;
};

using SparseVector = std::vector<std::pair<std::size_t, Scalar>>;

/// c_{ij}^k: [x_i, x_j] has coefficient c on x_k.
struct StructureConstant {
    std::size_t i;
    std::size_t j;
    std::size_t k;
    Scalar c;

    friend bool operator==(const StructureConstant&, const StructureConstant&) = default;
};

/// Finite-dimensional Lie algebra given by structure constants.
///
/// Only brackets [x_i, x_j] with i < j are stored; the i > j half is read
/// back with a sign flip, so antisymmetry holds by construction. The Jacobi
/// identity is not enforced here (see check_jacobi).
class LieAlgebra {
public:
    /// Constants with i > j are flipped to i < j with negated coefficient;
    /// i == j with c != 0 and duplicate (i,j,k) entries are rejected.
    LieAlgebra(std::vector<BasisLabel> labels, std::vector<StructureConstant> constants);

    static LieAlgebra abelian(std::size_t dim);

    std::size_t dim() const { return labels_.size(); }
    const std::vector<BasisLabel>& labels() const { return labels_; }

    /// Canonical list sorted by (i, j, k), i < j, no zero coefficients.
    const std::vector<StructureConstant>& constants() const { return constants_; }

    SparseVector basis_bracket(std::size_t i, std::size_t j) const;
    Matrix ad(std::span<const Scalar> x) const;
    Matrix ad_basis(std::size_t i) const;

    std::optional<std::size_t> index_of(const BasisLabel& label) const;

private:
    std::vector<BasisLabel> labels_;
    std::vector<StructureConstant> constants_;
    std::vector<SparseVector> upper_;  // dim*dim, filled for i < j only
};

Vector bracket(const LieAlgebra& L, std::span<const Scalar> x, std::span<const Scalar> y);

/// Cyclic sum [x_i,[x_j,x_k]] + [x_j,[x_k,x_i]] + [x_k,[x_i,x_j]] over all i<j<k.
VerificationReport check_jacobi(const LieAlgebra& L);

/// phi([x_i, x_j]) == [phi(x_i), phi(x_j)] for every basis pair i<j.
VerificationReport check_lie_homomorphism(const LieAlgebra& source, const LieAlgebra& target, const Matrix& phi);

/// Superdiagonal ones: J e_{i+1} = e_i, J e_1 = 0. Requires n >= 2.
Matrix jordan_nilpotent_block(unsigned n);

/// R x_D R^n on basis {t, e_1..e_n}: [t, y] = D y, R^n abelian.
LieAlgebra semidirect_sum(const Matrix& D);

/// g + g* with [x, phi] = ad*_x phi = -phi o ad_x. Dual basis vectors
/// follow the original ones and are labelled "<name>*".
LieAlgebra cotangent(const LieAlgebra& L);

/// Basis positions of T*g in the ordering {z, e_1, f_1, ..., e_n, f_n, t}.
struct TgBasis {
    unsigned n;

    std::size_t dim() const { return 2 * std::size_t{n} + 2; }
    static constexpr std::size_t z() { return 0; }
    std::size_t e(unsigned i) const { return 2 * std::size_t{i} - 1; }
    std::size_t f(unsigned i) const { return 2 * std::size_t{i}; }
    std::size_t t() const { return 2 * std::size_t{n} + 1; }

    /// Position in this ordering of the alternate ordering
    /// {t, e_1..e_n, f_1..f_n, z}, indexed 0..2n+1.
    std::vector<std::size_t> alternate_order() const;
};

/// T*g for g = R x_{J_n(0)} R^n, written directly in the {z, e_1, f_1, ..., t} basis.
LieAlgebra build_tg(unsigned n);

/// Moves basis vector i to position perm[i]; labels move with it.
LieAlgebra permute_basis(const LieAlgebra& L, std::span<const std::size_t> perm);

/// Matrix of a linear map re-expressed after the basis permutation perm.
Matrix permute_matrix(const Matrix& m, std::span<const std::size_t> perm);

/// A subspace of coordinate space, stored as its reduced echelon basis so
/// that two equal subspaces have identical representations.
class Subspace {
public:
    explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim) {}
    static Subspace span(const std::vector<Vector>& vectors, std::size_t ambient_dim);
    static Subspace whole(std::size_t ambient_dim);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Vector>& basis() const { return basis_; }
    bool contains(std::span<const Scalar> v) const;
    bool contains(const Subspace& other) const;

    friend bool operator==(const Subspace&, const Subspace&) = default;

private:
    std::size_t ambient_;
    std::vector<Vector> basis_;
};

/// span{[u, v] : u in U, v in V}.
Subspace bracket_span(const LieAlgebra& L, const Subspace& U, const Subspace& V);

/// g^(0) = g, g^(k) = [g^(k-1), g], stopping once a term repeats (the repeat
/// is not included) or after dim+1 steps.
std::vector<Subspace> lower_central_series(const LieAlgebra& L);

Subspace center(const LieAlgebra& L);

/// Smallest k with g^(k) = 0, or nullopt when the series stalls above 0.
std::optional<unsigned> nilpotency_step(const LieAlgebra& L);

}  // namespace cotlsa
