#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rt/spectral.hpp"

using namespace rt;

namespace {

Vec col(const Mat& m, int j) {
    Vec v(m.rows());
    for (int i = 0; i < m.rows(); ++i) v[i] = m(i, j);
    return v;
}

void check_eigensystem(const RigidTriple& t) {
    EigenSystem es = eigenvectors(t);
    const Mat& target =
        t.spectrum.kind.tag == Family::Hypergeometric ? t.B : t.C;
    REQUIRE(es.vectors.cols() == target.rows());
    CHECK(rank(es.vectors) == es.vectors.cols());
    for (int j = 0; j < es.vectors.cols(); ++j) {
        Vec v = col(es.vectors, j);
        Vec mv = target * v;
        for (int i = 0; i < int(v.size()); ++i)
            CHECK(mv[i] == es.eigenvalue_of_column[j] * v[i]);
    }
}

void check_form(const RigidTriple& t) {
    EigenSystem es = eigenvectors(t);
    InvariantForm f = invariant_form(t, es);
    CHECK(!f.degenerate);
    CHECK(f.G.is_symmetric());
    CHECK(check_self_adjoint(t.A, f.G));
    CHECK(check_self_adjoint(t.B, f.G));
    CHECK(check_self_adjoint(t.C, f.G));
    // The Gram values really are <v_i, v_i> for the assembled form.
    Mat d = es.vectors.transpose() * f.G * es.vectors;
    if (t.spectrum.kind.tag != Family::E8)
        for (int i = 0; i < d.rows(); ++i)
            for (int j = 0; j < d.cols(); ++j)
                CHECK(d(i, j) == (i == j ? f.gram[i] : Rat(0)));
    CHECK(check_form_uniqueness(t) == 1);
}

RigidTriple sample_triple(Family tag, int m, std::uint64_t seed) {
    return build(sample_generic_spectrum({tag, m}, seed));
}

}  // namespace

TEST_CASE("closed-form eigenvector bases diagonalize the companion matrix") {
    check_eigensystem(sample_triple(Family::Hypergeometric, 4, 1));
    check_eigensystem(sample_triple(Family::Even, 3, 2));
    check_eigensystem(sample_triple(Family::Odd, 3, 3));
    check_eigensystem(sample_triple(Family::ExtraE8hat, 0, 4));
    check_eigensystem(sample_triple(Family::E8, 0, 5));
}

TEST_CASE("even closed-form B-eigenvectors") {
    RigidTriple t = sample_triple(Family::Even, 3, 6);
    EigenSystem es = eigenvectors(t);
    REQUIRE(es.vectors_B.cols() == 6);
    CHECK(rank(es.vectors_B) == 6);
    for (int j = 0; j < 6; ++j) {
        Vec v = col(es.vectors_B, j);
        Vec mv = t.B * v;
        for (int i = 0; i < 6; ++i)
            CHECK(mv[i] == es.eigenvalue_of_column_B[j] * v[i]);
    }
}

TEST_CASE("invariant form: symmetric, self-adjointness, uniqueness, Gram") {
    check_form(sample_triple(Family::Hypergeometric, 3, 11));
    check_form(sample_triple(Family::Even, 2, 12));
    check_form(sample_triple(Family::Odd, 2, 13));
    check_form(sample_triple(Family::ExtraE8hat, 0, 14));
    check_form(sample_triple(Family::E8, 0, 15));
}

TEST_CASE("triples on generic spectra are irreducible") {
    for (auto [tag, m, seed] :
         std::vector<std::tuple<Family, int, std::uint64_t>>{
             {Family::Hypergeometric, 3, 21},
             {Family::Even, 2, 22},
             {Family::Odd, 2, 23},
             {Family::ExtraE8hat, 0, 24},
             {Family::E8, 0, 25}}) {
        RigidTriple t = sample_triple(tag, m, seed);
        auto rep = check_irreducible_report(t);
        CHECK(rep.irreducible);
        CHECK(rep.span_dim == t.B.rows() * t.B.rows());
    }
}

TEST_CASE("hypergeometric rank-one structure") {
    RigidTriple t = sample_triple(Family::Hypergeometric, 5, 31);
    const TripleSpectrum& s = t.spectrum;
    const int m = 5;
    const Rat a1 = s.a[0], a2 = s.a[1];
    auto cert = hg_rank_one_certificate(t);
    // Every column of A - a2*I equals the i-vector.
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            CHECK(t.A(i, j) - (i == j ? a2 : Rat(0)) == cert.i_vec[i]);
    // So A*k = a2*k + (sum k_j) * i for every k; in particular A*i = a1*i
    // because sum_j i_j = a1 - a2.
    Rat total = 0;
    for (const Rat& e : cert.i_vec) total += e;
    CHECK(total == a1 - a2);
    Vec ai = t.A * cert.i_vec;
    for (int i = 0; i < m; ++i) CHECK(ai[i] == a1 * cert.i_vec[i]);
    EigenSystem es = eigenvectors(t);
    InvariantForm f = invariant_form(t, es);
    for (int i = 0; i < m; ++i) {
        // (A - a2) v_i = s_i * i  and  <v_i, v_i> = s_i / x_i.
        Vec v = col(es.vectors, i);
        Vec av = t.A * v;
        for (int r = 0; r < m; ++r)
            CHECK(av[r] - a2 * v[r] == cert.s[i] * cert.i_vec[r]);
        CHECK(f.gram[i] == cert.s[i] / cert.x[i]);
    }
    // sum x_i v_i = i, and the squared symmetrized entries match.
    for (int r = 0; r < m; ++r) {
        Rat acc = 0;
        for (int i = 0; i < m; ++i) acc += cert.x[i] * es.vectors(r, i);
        CHECK(acc == cert.i_vec[r]);
    }
    // In the v-basis the matrix of A - a2 is M_{ij} = s_j x_i, so in the
    // normalized eigenbasis v_i / sqrt(<v_i,v_i>) its (symmetric) entries
    // square to x_i x_j s_i s_j.
    Mat vinv = inverse(es.vectors);
    Mat ashift = t.A;
    for (int i = 0; i < m; ++i) ashift(i, i) -= a2;
    Mat mv = vinv * ashift * es.vectors;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            CHECK(mv(i, j) == cert.s[j] * cert.x[i]);
            CHECK(mv(i, j) * mv(j, i) ==
                  cert.x[i] * cert.x[j] * cert.s[i] * cert.s[j]);
        }
}

TEST_CASE("reducible on a spectrum hyperplane: span dimension drops") {
    // Force b_1 + c_m - a_2 = 0 in a hypergeometric spectrum.
    FamilyKind kind{Family::Hypergeometric, 3};
    TripleSpectrum s = sample_generic_spectrum(kind, 77);
    s.a[1] = s.b[0] + s.c[2];
    s.a[0] = 0;
    Rat rest = 0;
    for (const Rat& x : s.b) rest += x;
    for (const Rat& x : s.c) rest += x;
    s.a[0] = rest - Rat(2) * s.a[1];
    RigidTriple t = build(s);
    auto rep = check_irreducible_report(t);
    CHECK(!rep.irreducible);
    CHECK(rep.span_dim < 9);
}
