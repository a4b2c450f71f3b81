#include <doctest.h>

#include "cotlsa/errors.hpp"
#include "cotlsa/families.hpp"
#include "test_util.hpp"

using namespace cotlsa;

namespace {

std::vector<Scalar> S(std::initializer_list<Scalar> xs) { return xs; }

}  // namespace

TEST_CASE("sequences for (3, 2, 2)") {
    const auto seq = compute_sequences({3, Scalar(2), Scalar(2)});
    CHECK(seq.alphas == S({Scalar(2), Scalar(3, 2), Scalar(4, 3)}));
    CHECK(seq.betas == S({Scalar(2), Scalar(-5, 2), Scalar(-8, 5)}));
    CHECK(seq.gammas == S({Scalar(5, 11), Scalar(2, 11)}));
}

TEST_CASE("gamma values of other members") {
    CHECK(compute_sequences({3, Scalar(-2), Scalar(-2)}).gammas == S({Scalar(9, 11), Scalar(6, 11)}));
    CHECK(compute_sequences({2, Scalar(2), Scalar(2)}).gammas == S({Scalar(1, 4)}));
}

TEST_CASE("closed forms match the recurrences") {
    testutil::Gen g(2024);
    int checked = 0;
    for (int it = 0; it < 400; ++it) {
        const unsigned n = 2 + static_cast<unsigned>(g.index(7));
        const Scalar a = g.scalar(), b = g.scalar();
        if (!check_conditions(n, a, b).passed) {
            CHECK_THROWS_AS(compute_sequences({n, a, b}), ConditionViolation);
            continue;
        }
        ++checked;
        const auto seq = compute_sequences({n, a, b});
        const auto ref = oracle::recurrence_sequences(n, a, b);
        CHECK(seq.alphas == ref.alpha);
        CHECK(seq.betas == ref.beta);
        CHECK(seq.gammas == ref.gamma);
        for (unsigned i = 1; i <= n; ++i) {
            CHECK(alpha_closed_form(a, i) == seq.alpha(i));
            CHECK(beta_closed_form(b, i) == seq.beta(i));
        }
        for (unsigned i = 1; i < n; ++i) {
            CHECK(gamma_closed_form({n, a, b}, i) == seq.gamma(i));
            const auto alt = gamma_from_sequences(seq, i);
            REQUIRE(alt);
            CHECK(*alt == seq.gamma(i));
        }
    }
    CHECK(checked > 200);
}

TEST_CASE("sequence identities") {
    testutil::Gen g(77);
    for (int it = 0; it < 200; ++it) {
        const unsigned n = 2 + static_cast<unsigned>(g.index(6));
        const Scalar a = g.scalar(), b = g.scalar();
        if (!check_conditions(n, a, b).passed) continue;
        const auto s = compute_sequences({n, a, b});
        for (unsigned i = 1; i < n; ++i) {
            CHECK(s.alpha(i) * (Scalar(2) - s.alpha(i + 1)) == Scalar(1));
            CHECK(s.beta(i) * (Scalar(-2) - s.beta(i + 1)) == Scalar(1));
        }
        for (unsigned i = 1; i + 1 < n; ++i) {
            CHECK(s.gamma(i) + s.beta(n - i) * s.gamma(i + 1) == Scalar(0));
            CHECK((s.alpha(i + 1) - 1) * (s.gamma(i) - 1) - (s.beta(n - i) + 1) * s.gamma(i + 1) == Scalar(0));
        }
    }
}

TEST_CASE("alpha_i stay bounded between 1 and alpha for alpha > 1") {
    const Scalar a(7, 2);
    Scalar prev = a;
    for (unsigned i = 2; i <= 40; ++i) {
        const Scalar cur = alpha_closed_form(a, i);
        CHECK(cur > Scalar(1));
        CHECK(cur < prev);
        prev = cur;
    }
    const Scalar b(5, 3);
    for (unsigned i = 2; i <= 40; ++i) {
        const Scalar bi = beta_closed_form(b, i);
        CHECK(bi < Scalar(-1));
        CHECK(bi > Scalar(-3));
    }
}

TEST_CASE("admissibility conditions") {
    CHECK(check_conditions(3, Scalar(2), Scalar(2)).passed);
    CHECK_THROWS_AS(check_conditions(1, Scalar(2), Scalar(2)), SizeTooSmall);

    // k(alpha-1)+1 = 0 at k=2
    auto r = check_conditions(3, Scalar(1, 2), Scalar(2));
    CHECK_FALSE(r.passed);
    CHECK(r.clause == Admissibility::AlphaChain);
    CHECK(r.k == 2);
    CHECK_FALSE(r.message.empty());

    // k(beta+1)-1 = 0 at k=3
    r = check_conditions(3, Scalar(2), Scalar(-2, 3));
    CHECK(r.clause == Admissibility::BetaChain);
    CHECK(r.k == 3);

    // the chain is checked up to k = n inclusive
    r = check_conditions(4, Scalar(3, 4), Scalar(2));
    CHECK(r.clause == Admissibility::AlphaChain);
    CHECK(r.k == 4);

    // n(alpha-1)(beta+1) - alpha + beta + 2 = 0: n=2, alpha=2, beta -> 2(beta+1) + beta = 0
    r = check_conditions(2, Scalar(2), Scalar(-2, 3));
    CHECK(r.clause == Admissibility::Coupling);
    CHECK_THROWS_AS(compute_sequences({2, Scalar(2), Scalar(-2, 3)}), ConditionViolation);
}

TEST_CASE("build_delta matches the oracle tensor") {
    for (unsigned n = 2; n <= 6; ++n) {
        const FamilyParams p{n, Scalar(5, 2), Scalar(-7, 3)};
        REQUIRE(check_conditions(n, p.alpha, p.beta).passed);
        const auto ref = oracle::recurrence_sequences(n, p.alpha, p.beta);
        CHECK(testutil::tensor_of(build_delta(p)) == oracle::delta(n, ref));
        CHECK(oracle::associator_failures(oracle::delta(n, ref)).empty());
        CHECK(oracle::commutator_failures(oracle::delta(n, ref), oracle::tg(n)).empty());
    }
}

TEST_CASE("translation relations") {
    for (unsigned n = 2; n <= 5; ++n) CHECK(check_translation_relations(build_delta({n, Scalar(3), Scalar(2)}), n).passed);

    auto seq = compute_sequences({3, Scalar(3), Scalar(2)});
    seq.alphas[0] += 1;
    const auto r = check_translation_relations(build_delta_from_sequences(seq), 3);
    CHECK_FALSE(r.passed);
    CHECK_THROWS_AS(check_translation_relations(build_delta({2, Scalar(3), Scalar(2)}), 3), DimensionMismatch);
    CHECK_THROWS_AS(build_delta_from_sequences({{Scalar(1), Scalar(2)}, {Scalar(1)}, {}}), DimensionMismatch);
}

TEST_CASE("rigidity assumptions") {
    CHECK(check_rigidity_assumptions({3, Scalar(3), Scalar(2)}).passed);
    // alpha_3 = 1/2 at alpha = 3/4; earlier indices would break admissibility
    auto r = check_rigidity_assumptions({3, Scalar(3, 4), Scalar(2)});
    CHECK_FALSE(r.passed);
    CHECK(r.k == 3);
    CHECK(compute_sequences({3, Scalar(3, 4), Scalar(2)}).alpha(3) == Scalar(1, 2));
    // beta_3 = -1/2 at beta = -3/4
    r = check_rigidity_assumptions({3, Scalar(3), Scalar(-3, 4)});
    CHECK_FALSE(r.passed);
    CHECK(compute_sequences({3, Scalar(3), Scalar(-3, 4)}).beta(3) == Scalar(-1, 2));
    // alpha = 1 makes every alpha_i = 1
    CHECK_FALSE(check_rigidity_assumptions({2, Scalar(1), Scalar(2)}).passed);
    // beta = -1 makes every beta_i = -1
    CHECK_FALSE(check_rigidity_assumptions({2, Scalar(3), Scalar(-1)}).passed);
    CHECK_THROWS_AS(check_rigidity_assumptions({3, Scalar(1, 2), Scalar(2)}), ConditionViolation);
}

TEST_CASE("equivalence predicate case I") {
    const FamilyParams p{3, Scalar(3), Scalar(2)};
    const auto v = lsa_equivalence_predicate(p, p);
    CHECK(v.result == EquivalenceResult::EquivalentCaseI);
    REQUIRE(v.certificate);
    CHECK(*v.certificate == Matrix::identity(8));
    CHECK(to_string(v.result) == "EquivalentCaseI");
}

TEST_CASE("equivalence predicate case II and its certificate") {
    for (unsigned n = 2; n <= 6; ++n) {
        const FamilyParams p{n, Scalar(3), Scalar(2)};
        const FamilyParams q{n, -Scalar(2), -Scalar(3)};
        const auto v = lsa_equivalence_predicate(p, q);
        CHECK(v.result == EquivalenceResult::EquivalentCaseII);
        REQUIRE(v.certificate);
        CHECK(*v.certificate == build_case_ii_iso(n));
        CHECK(verify_lsa_isomorphism(build_delta(p), build_delta(q), *v.certificate).passed);
        CHECK(swapped_sequences(compute_sequences(p), compute_sequences(q)));
    }
}

TEST_CASE("case II map on T*g") {
    const TgBasis B{3};
    const Matrix phi = build_case_ii_iso(3);
    CHECK(phi.column(B.z()) == scale(Scalar(-1), unit_vector(8, B.z())));
    CHECK(phi.column(B.e(1)) == scale(Scalar(-1), unit_vector(8, B.f(1))));
    CHECK(phi.column(B.f(1)) == unit_vector(8, B.e(1)));
    CHECK(phi.column(B.e(3)) == scale(Scalar(-1), unit_vector(8, B.f(3))));
    CHECK(phi.column(B.f(3)) == unit_vector(8, B.e(3)));
    CHECK(phi.column(B.t()) == unit_vector(8, B.t()));
    CHECK(check_lie_homomorphism(build_tg(3), build_tg(3), phi).passed);
}

TEST_CASE("non-equivalent members") {
    const auto v = lsa_equivalence_predicate({3, Scalar(3), Scalar(2)}, {3, Scalar(4), Scalar(2)});
    CHECK(v.result == EquivalenceResult::NotEquivalent);
    CHECK_FALSE(v.certificate);
    CHECK(v.note == kNecessityTrustedNote);

    const auto bad = lsa_equivalence_predicate({3, Scalar(3, 4), Scalar(2)}, {3, Scalar(3, 4), Scalar(2)});
    CHECK(bad.result == EquivalenceResult::AssumptionsViolated);
    CHECK(bad.note.find("alpha_3") != std::string::npos);
}

TEST_CASE("predicate errors") {
    CHECK_THROWS_AS(lsa_equivalence_predicate({2, Scalar(3), Scalar(2)}, {3, Scalar(3), Scalar(2)}), DimensionMismatch);
    CHECK_THROWS_AS(lsa_equivalence_predicate({3, Scalar(1, 2), Scalar(2)}, {3, Scalar(3), Scalar(2)}),
                    ConditionViolation);
}

TEST_CASE("gamma complement") {
    const auto a = compute_sequences({3, Scalar(2), Scalar(2)});
    const auto b = compute_sequences({3, Scalar(-2), Scalar(-2)});
    CHECK(check_gamma_complement(a, b) == GammaComplement::Pass);
    CHECK(a.gamma(1) + b.gamma(2) == Scalar(1));
    CHECK(check_gamma_complement(a, a) == GammaComplement::NotApplicable);
    auto broken = b;
    broken.gammas[0] += 1;
    CHECK(check_gamma_complement(a, broken) == GammaComplement::Fail);
    CHECK(to_string(GammaComplement::NotApplicable) == "not_applicable");

    testutil::Gen g(31337);
    for (int it = 0; it < 100; ++it) {
        const unsigned n = 2 + static_cast<unsigned>(g.index(5));
        const Scalar x = g.scalar(), y = g.scalar();
        if (!check_conditions(n, x, y).passed || !check_conditions(n, -y, -x).passed) continue;
        CHECK(check_gamma_complement(compute_sequences({n, x, y}), compute_sequences({n, -y, -x})) ==
              GammaComplement::Pass);
    }
}

TEST_CASE("set A") {
    CHECK(in_set_A({3, Scalar(3), Scalar(2)}));
    CHECK_FALSE(in_set_A({3, Scalar(1), Scalar(2)}));
    CHECK_FALSE(in_set_A({3, Scalar(3), Scalar(-2)}));
}
