#include <doctest.h>

#include <numeric>

#include "cotlsa/errors.hpp"
#include "cotlsa/families.hpp"
#include "cotlsa/serialize.hpp"
#include "cotlsa/symplectic.hpp"
#include "test_util.hpp"

using namespace cotlsa;

namespace {

constexpr std::uint64_t kSeed = 0xC07A5A;

std::optional<FamilyParams> admissible(testutil::Gen& g, unsigned max_n) {
    const unsigned n = 2 + static_cast<unsigned>(g.index(max_n - 1));
    const Scalar a = g.scalar(), b = g.scalar();
    if (!check_conditions(n, a, b).passed) return std::nullopt;
    return FamilyParams{n, a, b};
}

Matrix random_invertible(testutil::Gen& g, std::size_t n) {
    for (;;) {
        Matrix m = g.matrix(n, n);
        if (!determinant(m).is_zero()) return m;
    }
}

// x.'y = phi(phi^-1 x . phi^-1 y) on the transported bracket
LsaProduct transport(const LsaProduct& S, const Matrix& phi) {
    const std::size_t n = S.dim();
    const Matrix inv = *inverse(phi);
    std::vector<StructureConstant> cs;
    std::vector<ProductEntry> ps;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Vector u = inv.column(i), v = inv.column(j);
            const Vector prod = phi.apply(lsa_product(S, u, v));
            for (std::size_t k = 0; k < n; ++k)
                if (!prod[k].is_zero()) ps.push_back({i, j, k, prod[k]});
            if (i < j) {
                const Vector br = phi.apply(bracket(S.base(), u, v));
                for (std::size_t k = 0; k < n; ++k)
                    if (!br[k].is_zero()) cs.push_back({i, j, k, br[k]});
            }
        }
    return LsaProduct(LieAlgebra(S.base().labels(), cs), ps);
}

}  // namespace

TEST_CASE("random admissible members satisfy every axiom") {
    testutil::Gen g(kSeed);
    int seen = 0;
    for (int it = 0; it < 120 && seen < 40; ++it) {
        const auto p = admissible(g, 6);
        if (!p) continue;
        ++seen;
        const LsaProduct S = build_delta(*p);
        CHECK(check_left_symmetric(S).passed);
        CHECK(check_left_hom(S).passed);
        CHECK(check_translation_relations(S, p->n).passed);
        CHECK(check_complete(S).verdict == CompletenessVerdict::CompleteByTriangularization);
    }
    CHECK(seen >= 30);
}

TEST_CASE("trace criterion agrees with triangularization on random members") {
    testutil::Gen g(kSeed + 1);
    int seen = 0;
    for (int it = 0; it < 60 && seen < 12; ++it) {
        const auto p = admissible(g, 4);
        if (!p) continue;
        ++seen;
        CHECK(trace_criterion(build_delta(*p)).verdict == CompletenessVerdict::CompleteByTraceCriterion);
    }
}

TEST_CASE("random single-entry perturbations are caught") {
    testutil::Gen g(kSeed + 2);
    for (int it = 0; it < 40; ++it) {
        const auto p = admissible(g, 5);
        if (!p) continue;
        auto entries = build_delta(*p).entries();
        const std::size_t victim = g.index(entries.size());
        entries[victim].p += Scalar(1);
        if (entries[victim].p.is_zero()) entries[victim].p += Scalar(1);
        const LsaProduct S(build_tg(p->n), entries);
        const auto r = check_left_symmetric(S);
        CHECK_FALSE(r.passed);
        const bool oracle_fails = !oracle::associator_failures(testutil::tensor_of(S)).empty() ||
                                  !oracle::commutator_failures(testutil::tensor_of(S), oracle::tg(p->n)).empty();
        CHECK(oracle_fails);
    }
}

TEST_CASE("isomorphism check accepts random transports and rejects wrong maps") {
    testutil::Gen g(kSeed + 3);
    for (int it = 0; it < 15; ++it) {
        const auto p = admissible(g, 3);
        if (!p) continue;
        const LsaProduct S = build_delta(*p);
        const Matrix phi = random_invertible(g, S.dim());
        const LsaProduct T = transport(S, phi);
        CHECK(check_jacobi(T.base()).passed);
        CHECK(check_left_symmetric(T).passed);
        CHECK(verify_lsa_isomorphism(S, T, phi).passed);
        CHECK_FALSE(verify_lsa_isomorphism(S, T, Scalar(2) * phi).passed);
    }
}

TEST_CASE("random lambda forms induce the matching family member") {
    testutil::Gen g(kSeed + 4);
    int seen = 0;
    for (int it = 0; it < 80 && seen < 25; ++it) {
        const unsigned n = 2 + static_cast<unsigned>(g.index(5));
        const Scalar lam = g.scalar(20, 7);
        if (lam.is_integer()) continue;
        ++seen;
        const LambdaParams p{n, lam};
        const TwoForm w = build_omega_lambda(p);
        CHECK(check_closed(w).passed);
        CHECK(is_nondegenerate(w));
        CHECK(check_induced_matches_family(p).passed);
        CHECK(check_conditions(n, family_params(p).alpha, family_params(p).beta).passed);
    }
    CHECK(seen >= 20);
}

TEST_CASE("case II pairs are found for random lambda") {
    testutil::Gen g(kSeed + 5);
    for (int it = 0; it < 20; ++it) {
        const unsigned n = 2 + static_cast<unsigned>(g.index(4));
        const Scalar lam = g.scalar(20, 7);
        const Scalar other = Scalar(n) - 1 - lam;
        if (lam.is_integer() || lam == other) continue;
        const auto v = symplectic_equivalence_predicate({n, lam}, {n, other});
        CHECK(v.result == EquivalenceResult::EquivalentCaseII);
        const auto v2 = lsa_equivalence_predicate(family_params({n, lam}), family_params({n, other}));
        if (v2.result != EquivalenceResult::AssumptionsViolated) CHECK(v2.result == EquivalenceResult::EquivalentCaseII);
    }
}

TEST_CASE("swapped family parameters satisfy the gamma complement") {
    testutil::Gen g(kSeed + 6);
    for (int it = 0; it < 60; ++it) {
        const auto p = admissible(g, 6);
        if (!p) continue;
        const FamilyParams q{p->n, -p->beta, -p->alpha};
        if (!check_conditions(q.n, q.alpha, q.beta).passed) continue;
        CHECK(check_gamma_complement(compute_sequences(*p), compute_sequences(q)) == GammaComplement::Pass);
        CHECK(verify_lsa_isomorphism(build_delta(*p), build_delta(q), build_case_ii_iso(p->n)).passed);
    }
}

TEST_CASE("jacobi and series are invariant under basis permutation") {
    testutil::Gen g(kSeed + 7);
    for (int it = 0; it < 20; ++it) {
        const unsigned n = 2 + static_cast<unsigned>(g.index(4));
        const LieAlgebra L = build_tg(n);
        std::vector<std::size_t> perm(L.dim());
        std::iota(perm.begin(), perm.end(), 0);
        for (std::size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[g.index(i)]);
        const LieAlgebra P = permute_basis(L, perm);
        CHECK(check_jacobi(P).passed);
        std::vector<std::size_t> a, b;
        for (const auto& s : lower_central_series(L)) a.push_back(s.dim());
        for (const auto& s : lower_central_series(P)) b.push_back(s.dim());
        CHECK(a == b);
        CHECK(center(P).dim() == center(L).dim());
    }
}

TEST_CASE("random artifacts round-trip byte for byte") {
    testutil::Gen g(kSeed + 8);
    for (int it = 0; it < 30; ++it) {
        if (const auto p = admissible(g, 5)) {
            const std::string text = to_json(build_delta(*p), *p);
            const auto back = parse_lsa(text);
            CHECK(to_json(back.product, back.family) == text);
        }
        const unsigned n = 2 + static_cast<unsigned>(g.index(4));
        const Scalar lam = g.scalar(20, 7);
        if (lam.is_integer()) continue;
        const std::string text = to_json(build_omega_lambda({n, lam}), LambdaParams{n, lam});
        const auto back = parse_form(text);
        CHECK(to_json(back.form, back.family) == text);
    }
}
