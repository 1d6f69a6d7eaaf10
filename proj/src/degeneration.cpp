#include "rt/degeneration.hpp"

#include <functional>

#include "rt/spectrum.hpp"

namespace rt {
namespace {

Rat dv(const Rat& num, const Rat& den) {
    if (den == 0) throw PoleInFormula("zero denominator in z-basis formula");
    return num / den;
}

Mat submatrix(const Mat& m, int drop) {
    Mat r(m.rows() - 1, m.cols() - 1);
    for (int i = 0, ri = 0; i < m.rows(); ++i) {
        if (i == drop) continue;
        for (int j = 0, rj = 0; j < m.cols(); ++j) {
            if (j == drop) continue;
            r(ri, rj) = m(i, j);
            ++rj;
        }
        ++ri;
    }
    return r;
}

Mat block_of(const Mat& m, const std::vector<int>& idx) {
    Mat r(int(idx.size()), int(idx.size()));
    for (int i = 0; i < r.rows(); ++i)
        for (int j = 0; j < r.cols(); ++j) r(i, j) = m(idx[i], idx[j]);
    return r;
}

void require_invariance(const Mat& m, int coord, bool row) {
    for (int j = 0; j < m.rows(); ++j) {
        if (j == coord) continue;
        const Rat& e = row ? m(coord, j) : m(j, coord);
        if (e != 0)
            throw NotOnHyperplane("coordinate subspace is not invariant");
    }
}

// Diagonal solutions t of diag(t) * M = N * diag(t) for all pairs; returns
// the kernel basis of the induced linear system on t.
std::vector<Vec> diagonal_intertwiners(const std::vector<const Mat*>& ms,
                                       const std::vector<const Mat*>& ns) {
    const int n = ms[0]->rows();
    Mat sys(int(ms.size()) * n * n, n);
    int r = 0;
    for (size_t t = 0; t < ms.size(); ++t)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j, ++r) {
                sys(r, i) += (*ms[t])(i, j);
                sys(r, j) -= (*ns[t])(i, j);
            }
    return kernel(sys);
}

// Full solutions T of T * M = N * T, flattened row-major.
std::vector<Vec> full_intertwiners(const std::vector<const Mat*>& ms,
                                   const std::vector<const Mat*>& ns) {
    const int n = ms[0]->rows();
    Mat sys(int(ms.size()) * n * n, n * n);
    int r = 0;
    for (size_t t = 0; t < ms.size(); ++t)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j, ++r)
                for (int k = 0; k < n; ++k) {
                    sys(r, i * n + k) += (*ms[t])(k, j);
                    sys(r, k * n + j) -= (*ns[t])(i, k);
                }
    return kernel(sys);
}

DegenerationResult finish(RigidTriple restricted, RigidTriple direct) {
    auto ker = diagonal_intertwiners({&restricted.B, &restricted.C},
                                     {&direct.B, &direct.C});
    if (ker.size() != 1)
        throw DegenerateSpectrum("intertwiner space is not one-dimensional");
    const Vec& t = ker[0];
    const int n = int(t.size());
    bool literal = true;
    for (const Rat& x : t) {
        if (x == 0) throw DegenerateForm("intertwiner is singular");
        if (x != t[0]) literal = false;
    }
    Mat tm(n, n);
    for (int i = 0; i < n; ++i) tm(i, i) = t[i];
    return {std::move(restricted), std::move(direct), std::move(tm), literal};
}

std::vector<Rat> erase_at(std::vector<Rat> v, int idx0) {
    v.erase(v.begin() + idx0);
    return v;
}

}  // namespace

DegenerationResult om_from_em_sub(const RigidTriple& em, int i) {
    const TripleSpectrum& s = em.spectrum;
    const int m = s.kind.m;
    if (s.kind.tag != Family::Even)
        throw DimensionMismatch("om_from_em_sub expects an even triple");
    if (i < 1 || i > 2 * m) throw DimensionMismatch("index out of range");
    if (p_form(s, i, 3, 2) != 0) throw NotOnHyperplane("p32_i != 0");
    const int drop = 2 * m - i;  // 0-based slot of e_{2m+1-i}
    require_invariance(em.B, drop, /*row=*/true);
    require_invariance(em.C, drop, /*row=*/true);
    TripleSpectrum so;
    so.kind = {Family::Odd, m - 1};
    so.a = s.a;
    so.b = s.b;
    so.c = erase_at(s.c, i - 1);
    RigidTriple restricted{so, submatrix(em.B, drop), submatrix(em.C, drop),
                           submatrix(em.A, drop)};
    return finish(std::move(restricted), build_odd(so));
}

DegenerationResult om_from_em_factor(const RigidTriple& em, int i) {
    const TripleSpectrum& s = em.spectrum;
    const int m = s.kind.m;
    if (s.kind.tag != Family::Even)
        throw DimensionMismatch("om_from_em_factor expects an even triple");
    if (i < 1 || i > 2 * m) throw DimensionMismatch("index out of range");
    if (p_form(s, i, 3, 1) != 0) throw NotOnHyperplane("p31_i != 0");
    const int drop = 2 * m - i;
    require_invariance(em.B, drop, /*row=*/false);
    require_invariance(em.C, drop, /*row=*/false);
    TripleSpectrum so;
    so.kind = {Family::Odd, m - 1};
    so.a = {s.a[1], s.a[0]};  // quotient swaps the a-roles
    so.b = s.b;
    so.c = erase_at(s.c, i - 1);
    RigidTriple quotient{so, submatrix(em.B, drop), submatrix(em.C, drop),
                         submatrix(em.A, drop)};
    return finish(std::move(quotient), build_odd(so));
}

DegenerationResult em_from_om(const RigidTriple& om, int i) {
    const TripleSpectrum& s = om.spectrum;
    const int m = s.kind.m;
    if (s.kind.tag != Family::Odd)
        throw DimensionMismatch("em_from_om expects an odd triple");
    if (i < m + 1 || i > 2 * m)
        throw DimensionMismatch("em_from_om needs m+1 <= i <= 2m");
    if (p_form(s, i, 2, 1) != 0) throw NotOnHyperplane("p21_i != 0");
    const int drop = 2 * m + 1 - i;  // 0-based slot of e_{2m+2-i}
    require_invariance(om.B, drop, /*row=*/false);
    require_invariance(om.C, drop, /*row=*/false);
    TripleSpectrum se;
    se.kind = {Family::Even, m};
    se.a = s.a;
    se.b = s.b;
    se.c = erase_at(s.c, i - 1);
    RigidTriple quotient{se, submatrix(om.B, drop), submatrix(om.C, drop),
                         submatrix(om.A, drop)};
    return finish(std::move(quotient), build_even(se));
}

DegenerationResult hgm_sub_from_hgm(const RigidTriple& hg, int i) {
    const TripleSpectrum& s = hg.spectrum;
    const int m = s.kind.m;
    if (s.kind.tag != Family::Hypergeometric)
        throw DimensionMismatch("hgm_sub_from_hgm expects a hypergeometric triple");
    if (i < 1 || i > m) throw DimensionMismatch("index out of range");
    if (s.b[i - 1] + s.c[m - i] - s.a[1] != 0)
        throw NotOnHyperplane("b_i + c_{m+1-i} - a2 != 0");
    const int drop = i - 1;
    require_invariance(hg.B, drop, /*row=*/true);
    require_invariance(hg.C, drop, /*row=*/true);
    TripleSpectrum sh;
    sh.kind = {Family::Hypergeometric, m - 1};
    sh.a = s.a;
    sh.b = erase_at(s.b, i - 1);
    sh.c = erase_at(s.c, m - i);
    RigidTriple restricted{sh, submatrix(hg.B, drop), submatrix(hg.C, drop),
                           submatrix(hg.A, drop)};
    return finish(std::move(restricted), build_hypergeometric(sh));
}

EmbeddedTriple hgm_inside_em(const RigidTriple& em, EmBlock blk) {
    const TripleSpectrum& s = em.spectrum;
    const int m = s.kind.m;
    if (s.kind.tag != Family::Even)
        throw DimensionMismatch("hgm_inside_em expects an even triple");
    const Rat a1 = s.a[0], a2 = s.a[1];
    std::vector<int> idx;
    TripleSpectrum sh;
    sh.kind = {Family::Hypergeometric, blk == EmBlock::V1V2 ? m : m + 1};
    if (blk == EmBlock::V1V2) {
        for (int k = 0; k < m; ++k) idx.push_back(k);
        sh.a = {-s.b[0], -s.b[1]};
        for (int j = 0; j < m; ++j) sh.b.push_back(s.b[2] + s.c[j] - a1 - a2);
        for (int j = 0; j < m; ++j) sh.c.push_back(s.c[m + j]);
    } else {
        idx.push_back(0);
        for (int k = m; k < 2 * m; ++k) idx.push_back(k);
        sh.a = {-s.b[0], -s.b[2]};
        sh.b = {-a1, -a2};
        for (int j = 0; j < m - 1; ++j)
            sh.b.push_back(s.b[1] + s.c[m + j] - a1 - a2);
        for (int j = 0; j < m; ++j) sh.c.push_back(s.c[j]);
        sh.c.push_back(s.c[2 * m - 1]);
    }
    EmbeddedTriple out;
    out.triple.spectrum = sh;
    out.triple.A = Rat(-1) * block_of(em.B, idx);
    out.triple.B = Rat(-1) * block_of(em.A, idx);
    out.triple.C = block_of(em.C, idx);
    out.direct = build_hypergeometric(sh);
    auto ker = full_intertwiners({&out.triple.B, &out.triple.C},
                                 {&out.direct.B, &out.direct.C});
    if (ker.size() != 1)
        throw DegenerateSpectrum("intertwiner space is not one-dimensional");
    const int n = int(idx.size());
    Mat t(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t(i, j) = ker[0][size_t(i) * n + j];
    if (rank(t) != n) throw DegenerateForm("intertwiner is singular");
    out.intertwiner = std::move(t);
    return out;
}

ZBasis z_basis(const RigidTriple& t) {
    const TripleSpectrum& s = t.spectrum;
    ZBasis zb;
    if (s.kind.tag == Family::Even) {
        const int m = s.kind.m;
        const int n = 2 * m;
        const auto& c = s.c;
        auto q = [&](int u, int v) -> Rat { return q_form(s, u, v); };
        Mat z = Mat::identity(n);
        // block of rows/columns 1+i, i = 1..m-1
        for (int i = 1; i < m; ++i)
            for (int j = 1; j < i; ++j) {
                Rat num = 1, den = 1;
                for (int k = 1 + j; k <= i; ++k) num *= q(k, 2 * m - i);
                for (int k = 2 * m + 1 - i; k <= 2 * m - j; ++k)
                    den *= c[2 * m - i - 1] - c[k - 1];
                z(i, j) = dv(num, den);
            }
        // block of rows/columns m+i, i = 1..m
        for (int i = 1; i <= m; ++i)
            for (int j = 1; j < i; ++j) {
                Rat num = 1, den = 1;
                for (int k = m + j; k <= m + i - 1; ++k) num *= q(m + 1 - i, k);
                for (int k = m + 2 - i; k <= m + 1 - j; ++k)
                    den *= c[m - i] - c[k - 1];
                z(m + i - 1, m + j - 1) = dv(num, den);
            }
        zb.Z = z;
        for (int j = 0; j < n; ++j) {
            Vec col(n);
            for (int r = 0; r < n; ++r) col[r] = z(r, j);
            zb.z_columns.push_back(col);
        }
        for (int k = 1; k < m; ++k) {
            Vec a(n);
            for (int r = 0; r < n; ++r)
                a[r] = zb.z_columns[0][r] + zb.z_columns[k][r] +
                       zb.z_columns[2 * m - k][r];
            zb.a_vectors.push_back(a);
        }
        Vec last(n);
        for (int r = 0; r < n; ++r)
            last[r] = zb.z_columns[0][r] + zb.z_columns[m][r];
        zb.a_vectors.push_back(last);
        // Each a_k spans inside the a2-eigenspace of A.
        for (const Vec& a : zb.a_vectors) {
            Vec aa = t.A * a;
            for (int r = 0; r < n; ++r)
                if (aa[r] != s.a[1] * a[r])
                    throw DegenerateSpectrum("a-vector is not an a2-eigenvector");
        }
    } else if (s.kind.tag == Family::ExtraE8hat) {
        const auto& c = s.c;
        Mat z = Mat::identity(6);
        z(1, 0) = dv(q_extra_form(s, 1, 4, 5), c[4] - c[5]);
        z(3, 2) = dv(q_extra_form(s, 2, 4, 5), c[2] - c[3]);
        z(5, 4) = dv(q_extra_form(s, 2, 3, 6), c[0] - c[1]);
        zb.Z = z;
        for (int j = 0; j < 6; ++j) {
            Vec col(6);
            for (int r = 0; r < 6; ++r) col[r] = z(r, j);
            zb.z_columns.push_back(col);
        }
        auto combine = [&](std::initializer_list<int> parts) {
            Vec a(6);
            for (int p : parts)
                for (int r = 0; r < 6; ++r) a[r] += zb.z_columns[p][r];
            return a;
        };
        zb.a_vectors = {combine({0, 4}), combine({1, 2}), combine({1, 4, 5}),
                        combine({3, 4})};
        for (const Vec& a : zb.a_vectors) {
            Vec aa = t.A * a;
            bool e1 = true, e2 = true;
            for (int r = 0; r < 6; ++r) {
                if (aa[r] != s.a[0] * a[r]) e1 = false;
                if (aa[r] != s.a[1] * a[r]) e2 = false;
            }
            if (!e1 && !e2)
                throw DegenerateSpectrum("a-vector is not an a-eigenvector");
        }
    } else {
        throw DimensionMismatch("z_basis expects an even or extra triple");
    }
    // rank of the a-vector span
    Mat av(int(zb.a_vectors.size()), int(zb.a_vectors[0].size()));
    for (int i = 0; i < av.rows(); ++i)
        for (int j = 0; j < av.cols(); ++j) av(i, j) = zb.a_vectors[i][j];
    if (rank(av) != av.rows())
        throw DegenerateSpectrum("a-vectors are linearly dependent");
    return zb;
}

Rat det_arrow_formula(const std::vector<Rat>& alpha, const std::vector<Rat>& beta,
                      const std::vector<Rat>& gamma) {
    const size_t n = alpha.size();
    if (beta.size() != n - 1 || gamma.size() != n - 1)
        throw DimensionMismatch("arrow matrix needs |beta| = |gamma| = |alpha|-1");
    Rat result = 1;
    for (const Rat& a : alpha) result *= a;
    for (size_t j = 0; j + 1 < n; ++j) {
        Rat term = beta[j] * gamma[j];
        for (size_t k = 1; k < n; ++k)
            if (k != 1 + j) term *= alpha[k];
        result -= term;
    }
    return result;
}

}  // namespace rt
