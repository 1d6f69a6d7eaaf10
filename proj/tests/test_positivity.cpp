#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rt/positivity.hpp"

using namespace rt;

TEST_CASE("signature_of handles definite, indefinite, and null directions") {
    Mat id = Mat::identity(3);
    Signature s = signature_of(id);
    CHECK(s.pos == 3);
    CHECK(s.neg == 0);
    CHECK(s.zero == 0);

    Mat d(3, 3);
    d(0, 0) = Rat(2);
    d(1, 1) = Rat(-5);
    // d(2,2) stays zero
    s = signature_of(d);
    CHECK(s.pos == 1);
    CHECK(s.neg == 1);
    CHECK(s.zero == 1);

    // hyperbolic plane: zero diagonal, off-diagonal coupling
    Mat h(2, 2);
    h(0, 1) = h(1, 0) = Rat(1);
    s = signature_of(h);
    CHECK(s.pos == 1);
    CHECK(s.neg == 1);
    CHECK(s.zero == 0);
}

TEST_CASE("predicates throw when ordering hypotheses fail") {
    auto s = sample_generic_spectrum({Family::Hypergeometric, 3}, 5);
    std::sort(s.b.begin(), s.b.end());  // ascending: violates the hypothesis
    CHECK_THROWS_AS((void)predicate_hg(s), OrderingViolation);
}

TEST_CASE("sweep agreement: hypergeometric") {
    for (int m : {2, 3, 5}) {
        SweepReport r = sweep_agreement({Family::Hypergeometric, m}, 400, 11);
        CHECK(r.samples == 400);
        CHECK(r.mismatches == 0);
        CHECK(r.definite > 0);
    }
}

TEST_CASE("sweep agreement: even") {
    for (int m : {2, 3}) {
        SweepReport r = sweep_agreement({Family::Even, m}, 4000, 12);
        CHECK(r.samples == 4000);
        CHECK(r.mismatches == 0);
        CHECK(r.definite > 0);
    }
}

TEST_CASE("sweep agreement: odd") {
    for (int m : {2, 3}) {
        SweepReport r = sweep_agreement({Family::Odd, m}, 4000, 13);
        CHECK(r.samples == 4000);
        CHECK(r.mismatches == 0);
        CHECK(r.definite > 0);
    }
}

TEST_CASE("sweep agreement: extra") {
    SweepReport r = sweep_agreement({Family::ExtraE8hat, 0}, 4000, 14);
    CHECK(r.samples == 4000);
    CHECK(r.mismatches == 0);
    CHECK(r.definite > 0);
}

TEST_CASE("sweep agreement: e8") {
    SweepReport r = sweep_agreement({Family::E8, 0}, 4000, 15);
    CHECK(r.samples == 4000);
    CHECK(r.mismatches == 0);
}

TEST_CASE("matched predicate verdict equals the exact form signature") {
    // Definite lattice points: check the full pipeline end to end.
    for (auto kind : {FamilyKind{Family::Hypergeometric, 3},
                      FamilyKind{Family::Even, 2}, FamilyKind{Family::Odd, 2},
                      FamilyKind{Family::ExtraE8hat, 0}}) {
        auto pts = klyachko_face_sample(kind, 21, 3);
        for (const auto& s : pts) {
            SignVerdict pred = predicate(s);
            RigidTriple t = build(s);
            InvariantForm f = invariant_form(t, eigenvectors(t));
            SignVerdict scan = gram_signature(f);
            CHECK(pred.verdict == scan.verdict);
        }
    }
}

TEST_CASE("e8 regimes all produce definite lattice points") {
    for (int k = 1; k <= 5; ++k) {
        auto pts = klyachko_face_sample({Family::E8, 0}, 30 + k, 2,
                                        "regime-" + std::to_string(k));
        REQUIRE(pts.size() == 2);
        for (const auto& s : pts) {
            SignVerdict pred = predicate_e8(s);
            CHECK(pred.matched_case == "regime-" + std::to_string(k));
            RigidTriple t = build_e8(s);
            InvariantForm f = invariant_form(t, eigenvectors(t));
            CHECK(gram_signature(f).verdict == Verdict::PositiveDefinite);
        }
    }
}

TEST_CASE("indefinite verdict carries a witness pair for solved grams") {
    // Scan generic spectra until an indefinite one shows up.
    for (std::uint64_t seed = 40;; ++seed) {
        auto s = sample_generic_spectrum({Family::Even, 2}, seed);
        RigidTriple t = build_even(s);
        InvariantForm f = invariant_form(t, eigenvectors(t));
        SignVerdict v = gram_signature(f);
        if (v.verdict != Verdict::Indefinite) continue;
        REQUIRE(v.witness.has_value());
        auto [i, j] = *v.witness;
        CHECK(f.gram[i] * f.gram[j] < 0);
        break;
    }
}

TEST_CASE("face filter restricts matched cases") {
    auto pts = klyachko_face_sample({Family::Hypergeometric, 3}, 51, 4,
                                    "column-2");
    for (const auto& s : pts) CHECK(predicate_hg(s).matched_case == "column-2");
}
