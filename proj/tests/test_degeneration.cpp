#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rt/degeneration.hpp"
#include "rt/spectral.hpp"

using namespace rt;

namespace {

void check_conjugacy(const DegenerationResult& d) {
    // T * restricted * T^{-1} == direct, entrywise.
    Mat tinv = inverse(d.intertwiner);
    CHECK(d.intertwiner * d.restricted.B * tinv == d.direct.B);
    CHECK(d.intertwiner * d.restricted.C * tinv == d.direct.C);
    CHECK(d.intertwiner * d.restricted.A * tinv == d.direct.A);
    if (d.literal) {
        CHECK(d.restricted.B == d.direct.B);
        CHECK(d.restricted.C == d.direct.C);
    }
}

}  // namespace

TEST_CASE("om_from_em_sub restricts to the odd constructor") {
    for (int m : {2, 3, 4})
        for (int i = 1; i <= m; ++i) {
            auto s = sample_hyperplane_spectrum({Family::Even, m},
                                                Hyperplane::EvenP32, i,
                                                100 * m + i);
            auto d = om_from_em_sub(build_even(s), i);
            check_conjugacy(d);
            CHECK(d.literal == (i == m));
            CHECK(verify_spectrum(d.restricted.A,
                                  {{s.a[0], m}, {s.a[1], m - 1}}));
        }
}

TEST_CASE("om_from_em_factor quotients to the odd constructor with a-roles swapped") {
    for (int m : {2, 3, 4})
        for (int i = 1; i <= m; ++i) {
            auto s = sample_hyperplane_spectrum({Family::Even, m},
                                                Hyperplane::EvenP31, i,
                                                200 * m + i);
            auto d = om_from_em_factor(build_even(s), i);
            check_conjugacy(d);
            CHECK(verify_spectrum(d.restricted.A,
                                  {{s.a[0], m - 1}, {s.a[1], m}}));
        }
}

TEST_CASE("em_from_om quotients back to the even constructor") {
    for (int m : {2, 3})
        for (int i = m + 1; i <= 2 * m; ++i) {
            auto s = sample_hyperplane_spectrum({Family::Odd, m},
                                                Hyperplane::OddP21, i,
                                                300 * m + i);
            auto d = em_from_om(build_odd(s), i);
            check_conjugacy(d);
            CHECK(d.literal == (i == m + 1));
        }
}

TEST_CASE("hgm_sub_from_hgm is literal for every index") {
    for (int m : {2, 3, 4})
        for (int i = 1; i <= m; ++i) {
            auto s = sample_hyperplane_spectrum({Family::Hypergeometric, m},
                                                Hyperplane::HgSub, i,
                                                400 * m + i);
            auto d = hgm_sub_from_hgm(build_hypergeometric(s), i);
            check_conjugacy(d);
            CHECK(d.literal);
        }
}

TEST_CASE("degeneration ops reject off-hyperplane inputs") {
    auto s = sample_generic_spectrum({Family::Even, 3}, 9);
    RigidTriple t = build_even(s);
    CHECK_THROWS_AS((void)om_from_em_sub(t, 2), NotOnHyperplane);
    CHECK_THROWS_AS((void)om_from_em_factor(t, 2), NotOnHyperplane);
}

TEST_CASE("hgm_inside_em produces hypergeometric triples on both blocks") {
    for (int m : {2, 3})
        for (auto blk : {EmBlock::V1V2, EmBlock::V1V3}) {
            auto s = sample_generic_spectrum({Family::Even, m}, 70 + m);
            auto emb = hgm_inside_em(build_even(s), blk);
            CHECK(emb.triple.A == emb.triple.B + emb.triple.C);
            const TripleSpectrum& sh = emb.triple.spectrum;
            CHECK(verify_spectrum(emb.triple.A, sh.a_eigs()));
            CHECK(verify_spectrum(emb.triple.B, sh.b_eigs()));
            CHECK(verify_spectrum(emb.triple.C, sh.c_eigs()));
            Mat tinv = inverse(emb.intertwiner);
            CHECK(emb.intertwiner * emb.triple.B * tinv == emb.direct.B);
            CHECK(emb.intertwiner * emb.triple.C * tinv == emb.direct.C);
            CHECK(check_irreducible(emb.triple));
        }
}

TEST_CASE("z-basis for the even family") {
    for (int m : {2, 3, 4}) {
        auto s = sample_generic_spectrum({Family::Even, m}, 80 + m);
        RigidTriple t = build_even(s);
        ZBasis zb = z_basis(t);
        REQUIRE(int(zb.a_vectors.size()) == m);
        for (int i = 0; i < 2 * m; ++i) {
            CHECK(zb.Z(i, i) == 1);
            for (int j = i + 1; j < 2 * m; ++j) CHECK(zb.Z(i, j) == 0);
        }
        // z-columns carry the B-flag and C-flag in standard form.
        EigenSystem es = eigenvectors(t);
        auto span_eq = [&](std::vector<Vec> vs, std::vector<Vec> ws) {
            Mat a(int(vs.size() + ws.size()), 2 * m);
            for (size_t r = 0; r < vs.size(); ++r)
                for (int j = 0; j < 2 * m; ++j) a(int(r), j) = vs[r][j];
            for (size_t r = 0; r < ws.size(); ++r)
                for (int j = 0; j < 2 * m; ++j)
                    a(int(vs.size() + r), j) = ws[r][j];
            Mat top(int(vs.size()), 2 * m);
            for (size_t r = 0; r < vs.size(); ++r)
                for (int j = 0; j < 2 * m; ++j) top(int(r), j) = vs[r][j];
            return rank(a) == int(vs.size()) && rank(top) == int(vs.size());
        };
        auto colvec = [&](const Mat& mat, int j) {
            Vec v(mat.rows());
            for (int r = 0; r < mat.rows(); ++r) v[r] = mat(r, j);
            return v;
        };
        std::vector<Vec> ws, zs;
        for (int j = 0; j < m; ++j) {
            ws.push_back(colvec(es.vectors_B, j));
            zs.push_back(zb.z_columns[j]);
        }
        CHECK(span_eq(ws, zs));
        std::vector<Vec> vs, ztail;
        for (int j = 0; j < m; ++j) {
            vs.push_back(colvec(es.vectors, j));
            ztail.push_back(zb.z_columns[2 * m - 1 - j]);
            CHECK(span_eq(vs, ztail));
        }
        // After normalizing, (A + Id) a_k = 0.
        EvenNormalization nz = even_normalization(s);
        RigidTriple u = normalize(t, nz.k, nz.theta, nz.phi);
        ZBasis zbn = z_basis(u);
        Mat aplus = u.A + Mat::identity(2 * m);
        for (const Vec& a : zbn.a_vectors) {
            Vec r = aplus * a;
            for (const Rat& x : r) CHECK(x == 0);
        }
    }
}

TEST_CASE("z-basis for the extra family") {
    auto s = sample_generic_spectrum({Family::ExtraE8hat, 0}, 91);
    RigidTriple t = build_extra(s);
    ZBasis zb = z_basis(t);
    CHECK(zb.a_vectors.size() == 4);
    CHECK(zb.Z(1, 0) == q_extra_form(s, 1, 4, 5) / (s.c[4] - s.c[5]));
    CHECK(zb.Z(3, 2) == q_extra_form(s, 2, 4, 5) / (s.c[2] - s.c[3]));
    CHECK(zb.Z(5, 4) == q_extra_form(s, 2, 3, 6) / (s.c[0] - s.c[1]));
}

TEST_CASE("arrow-matrix determinant formula matches expansion") {
    // 2x2: alpha1*alpha2 - beta1*gamma1
    CHECK(det_arrow_formula({Rat(3), Rat(5)}, {Rat(2)}, {Rat(7)}) ==
          Rat(3 * 5 - 2 * 7));
    // beta = gamma = 0 -> product of alphas
    CHECK(det_arrow_formula({Rat(2), Rat(3), Rat(4)}, {Rat(0), Rat(0)},
                            {Rat(0), Rat(0)}) == Rat(24));
    // random 5x5 arrow matrix vs the generic determinant routine
    std::vector<Rat> alpha = {rat(3, 2), rat(-1, 3), Rat(4), rat(7, 5), Rat(-2)};
    std::vector<Rat> beta = {Rat(1), rat(-2, 3), Rat(5), rat(1, 7)};
    std::vector<Rat> gamma = {rat(4, 3), Rat(2), rat(-1, 2), Rat(3)};
    Mat m(5, 5);
    for (int i = 0; i < 5; ++i) m(i, i) = alpha[i];
    for (int j = 1; j < 5; ++j) {
        m(0, j) = beta[j - 1];
        m(j, 0) = gamma[j - 1];
    }
    CHECK(det_arrow_formula(alpha, beta, gamma) == det(m));
}
