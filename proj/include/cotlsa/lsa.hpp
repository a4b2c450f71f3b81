#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cotlsa/algebra.hpp"
#include "cotlsa/matrix.hpp"
#include "cotlsa/poly.hpp"
#include "cotlsa/report.hpp"

namespace cotlsa {

/// p_{ij}^k: x_i . x_j has coefficient p on x_k.
struct ProductEntry {
    std::size_t i;
    std::size_t j;
    std::size_t k;
    Scalar p;

    friend bool operator==(const ProductEntry&, const ProductEntry&) = default;
};

/// A bilinear product on the vector space of a Lie algebra, stored as a
/// full triplet list with no symmetry assumed. Whether it is left-symmetric
/// over its base is a checked property, not an assumption.
class LsaProduct {
public:
    LsaProduct(LieAlgebra base, std::vector<ProductEntry> entries);

    const LieAlgebra& base() const { return base_; }
    std::size_t dim() const { return base_.dim(); }

    /// Sorted by (i, j, k), zeros dropped.
    const std::vector<ProductEntry>& entries() const { return entries_; }
    const SparseVector& basis_product(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }

    /// Matrix of y -> x_i . y.
    Matrix left_basis(std::size_t i) const;
    /// Matrix of y -> y . x_i.
    Matrix right_basis(std::size_t i) const;

private:
    LieAlgebra base_;
    std::vector<ProductEntry> entries_;
    std::vector<SparseVector> table_;
};

Vector lsa_product(const LsaProduct& S, std::span<const Scalar> x, std::span<const Scalar> y);
Matrix left_translation(const LsaProduct& S, std::span<const Scalar> x);
Matrix right_translation(const LsaProduct& S, std::span<const Scalar> x);

/// (x_i, x_j, x_k) == (x_j, x_i, x_k) for the associator
/// (x, y, z) = x.(y.z) - (x.y).z, over all i<j and all k.
VerificationReport check_associator_symmetry(const LsaProduct& S);

/// x_i.x_j - x_j.x_i == [x_i, x_j] over all i<j.
VerificationReport check_commutator_bracket(const LsaProduct& S);

/// Both left-symmetric axioms; witnesses from either part.
VerificationReport check_left_symmetric(const LsaProduct& S);

/// [l_{x_i}, l_{x_j}] == l_{[x_i, x_j]} over all i<j. A witness carries the
/// first differing column of the two sides.
VerificationReport check_left_hom(const LsaProduct& S);

enum class CompletenessVerdict { CompleteByTriangularization, CompleteByTraceCriterion, NotComplete };
std::string to_string(CompletenessVerdict v);

/// Concrete element whose right translation is not nilpotent.
struct CompletenessWitness {
    Vector point;
    unsigned power = 0;  // k with trace(r_x^k) != 0
    Scalar trace_value;
};

struct CompletenessResult {
    CompletenessVerdict verdict = CompletenessVerdict::NotComplete;
    std::optional<std::vector<std::size_t>> ordering;  // set when triangularized
    std::optional<CompletenessWitness> witness;        // set when not complete
};

/// Basis orderings tried by the triangularization shortcut.
std::vector<std::vector<std::size_t>> candidate_orderings(const LsaProduct& S);

/// True when every r_{x_j} sends each basis vector strictly forward in `order`.
bool right_translations_strictly_triangular(const LsaProduct& S, std::span<const std::size_t> order);

std::optional<std::vector<std::size_t>> find_triangular_ordering(const LsaProduct& S);

/// r_X for the generic element X = sum x_i e_i, entries linear in x.
PolyMatrix generic_right_translation(const LsaProduct& S);

/// Power-trace test on the generic element: nilpotent for every x iff
/// trace((r_X)^k) vanishes identically for k = 1..dim.
CompletenessResult trace_criterion(const LsaProduct& S);

/// Requires S to be left-symmetric (throws AxiomsNotVerified otherwise).
/// Tries the triangular orderings first, then the trace criterion.
CompletenessResult check_complete(const LsaProduct& S);

/// phi invertible, a Lie isomorphism of the bases, and
/// phi(x_i . x_j) == phi(x_i) .' phi(x_j) for all ordered basis pairs.
VerificationReport verify_lsa_isomorphism(const LsaProduct& S, const LsaProduct& target, const Matrix& phi);

}  // namespace cotlsa
