#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rt/families.hpp"
#include "rt/spectral.hpp"

using namespace rt;

namespace {

void check_triple(const RigidTriple& t) {
    const TripleSpectrum& s = t.spectrum;
    CHECK(t.A == t.B + t.C);
    CHECK(verify_spectrum(t.B, s.b_eigs()));
    CHECK(verify_spectrum(t.C, s.c_eigs()));
    CHECK(verify_spectrum(t.A, s.a_eigs()));
}

}  // namespace

TEST_CASE("sampled spectra satisfy the trace identity and lie in S''") {
    for (auto tag : {Family::Hypergeometric, Family::Even, Family::Odd,
                     Family::ExtraE8hat, Family::E8}) {
        FamilyKind kind{tag, 4};
        for (std::uint64_t seed = 1; seed <= 3; ++seed) {
            TripleSpectrum s = sample_generic_spectrum(kind, seed);
            CHECK(in_S_double_prime(s));
            Rat ta = 0, tb = 0, tc = 0;
            for (auto& [v, mult] : s.a_eigs()) ta += Rat(mult) * v;
            for (auto& [v, mult] : s.b_eigs()) tb += Rat(mult) * v;
            for (auto& [v, mult] : s.c_eigs()) tc += Rat(mult) * v;
            CHECK(ta == tb + tc);
        }
    }
}

TEST_CASE("hypergeometric triples have the claimed spectra") {
    for (int m : {2, 3, 5}) {
        auto s = sample_generic_spectrum({Family::Hypergeometric, m}, 10 + m);
        check_triple(build_hypergeometric(s));
    }
}

TEST_CASE("even triples have the claimed spectra") {
    for (int m : {2, 3, 4}) {
        auto s = sample_generic_spectrum({Family::Even, m}, 20 + m);
        check_triple(build_even(s));
    }
}

TEST_CASE("odd triples have the claimed spectra") {
    for (int m : {2, 3, 4}) {
        auto s = sample_generic_spectrum({Family::Odd, m}, 30 + m);
        check_triple(build_odd(s));
    }
}

TEST_CASE("extra triples have the claimed spectra") {
    for (std::uint64_t seed : {41, 42, 43}) {
        auto s = sample_generic_spectrum({Family::ExtraE8hat, 0}, seed);
        check_triple(build_extra(s));
    }
}

TEST_CASE("e8 triples have the claimed spectra") {
    for (std::uint64_t seed : {51, 52, 53}) {
        auto s = sample_generic_spectrum({Family::E8, 0}, seed);
        check_triple(build_e8(s));
    }
}

TEST_CASE("build dispatches on the family tag") {
    auto s = sample_generic_spectrum({Family::Odd, 2}, 7);
    CHECK(build(s).B == build_odd(s).B);
}

TEST_CASE("even normalization makes A an involution with a = (1, -1)") {
    for (int m : {2, 3}) {
        auto s = sample_generic_spectrum({Family::Even, m}, 60 + m);
        RigidTriple t = build_even(s);
        EvenNormalization nz = even_normalization(s);
        RigidTriple u = normalize(t, nz.k, nz.theta, nz.phi);
        CHECK(u.spectrum.a[0] == 1);
        CHECK(u.spectrum.a[1] == -1);
        CHECK(u.A * u.A == Mat::identity(2 * m));
        Rat tr = 0;
        for (int i = 0; i < 2 * m; ++i) tr += u.A(i, i);
        CHECK(tr == 0);
        check_triple(u);
    }
}

TEST_CASE("normalize rejects a zero scale") {
    auto s = sample_generic_spectrum({Family::Hypergeometric, 2}, 3);
    CHECK_THROWS_AS((void)normalize(build(s), Rat(0), Rat(1), Rat(1)), ZeroScale);
}
