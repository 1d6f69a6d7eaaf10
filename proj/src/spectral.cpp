#include "rt/spectral.hpp"

#include <functional>
#include <map>

namespace rt {
namespace {

// Product of f(k) for k in the inclusive range [lo, hi].
Rat prod(int lo, int hi, const std::function<Rat(int)>& f) {
    Rat r = 1;
    for (int k = lo; k <= hi; ++k) r *= f(k);
    return r;
}

Rat prod_skip(int lo, int hi, int skip, const std::function<Rat(int)>& f) {
    Rat r = 1;
    for (int k = lo; k <= hi; ++k)
        if (k != skip) r *= f(k);
    return r;
}

Rat neg_pow(int e) { return ((e % 2) + 2) % 2 == 0 ? Rat(1) : Rat(-1); }

Mat columns_to_mat(const std::vector<Vec>& cols) {
    int n = int(cols.empty() ? 0 : cols[0].size());
    Mat v(n, int(cols.size()));
    for (int j = 0; j < int(cols.size()); ++j)
        for (int i = 0; i < n; ++i) v(i, j) = cols[j][i];
    return v;
}

}  // namespace

Vec hg_eigvec_B(const TripleSpectrum& s, int i) {
    const int m = s.kind.m;
    const Rat a2 = s.a[1];
    const auto& b = s.b;
    const auto& c = s.c;
    Vec v(m, Rat(0));
    v[i - 1] = 1;
    for (int j = 1; j < i; ++j) {
        Rat t = (b[j - 1] + c[m - j] - a2) / (b[i - 1] - b[j - 1]);
        for (int k = 1; k < i - j; ++k)
            t *= (b[i - 1] + c[m - j - k] - a2) / (b[i - 1] - b[j + k - 1]);
        v[j - 1] = t;
    }
    return v;
}

Rat hg_gram(const TripleSpectrum& s, int i) {
    const int m = s.kind.m;
    const Rat a2 = s.a[1];
    const auto& b = s.b;
    const auto& c = s.c;
    Rat num = prod(i + 1, m, [&](int k) -> Rat { return b[i - 1] - b[k - 1]; }) *
              prod(m + 2 - i, m, [&](int k) -> Rat { return b[i - 1] + c[k - 1] - a2; });
    Rat den = prod(1, i - 1, [&](int k) -> Rat { return b[i - 1] - b[k - 1]; }) *
              prod(1, m + 1 - i, [&](int k) -> Rat { return b[i - 1] + c[k - 1] - a2; });
    return num / den;
}

Vec even_eigvec_C(const TripleSpectrum& s, int i) {
    const int m = s.kind.m;
    const int n = 2 * m;
    const auto& c = s.c;
    auto q = [&](int u, int v_) -> Rat { return q_form(s, u, v_); };
    auto p32 = [&](int k) -> Rat { return p_form(s, k, 3, 2); };
    Vec v(n, Rat(0));
    v[n - i] = 1;
    if (i <= m) return v;
    if (i < 2 * m) {
        const int ii = i - m;  // 1..m-1
        for (int j = 1; j <= m; ++j) {
            Rat num = p32(m + 1 - j) *
                      prod_skip(m + 1, m + j - 1, m + ii,
                                [&](int k) -> Rat { return q(m + 1 - j, k); }) *
                      prod_skip(m + 1 - ii, m, m + 1 - j,
                                [&](int k) -> Rat { return q(k, m + ii); });
            Rat den = (c[m - j] - c[m + ii - 1]) *
                      prod(m + 2 - j, m, [&](int k) -> Rat { return c[m - j] - c[k - 1]; }) *
                      prod(m + 1, m + ii - 1,
                           [&](int k) -> Rat { return c[k - 1] - c[m + ii - 1]; });
            v[m + j - 1] = neg_pow(ii) * num / den;
        }
        return v;
    }
    // i = 2m
    for (int j = 1; j < m; ++j) {
        Rat num = prod(1, j, [&](int k) -> Rat { return q(k, 2 * m - j); });
        Rat den = prod(2 * m + 1 - j, 2 * m,
                       [&](int k) -> Rat { return c[2 * m - j - 1] - c[k - 1]; });
        v[j] = num / den;
    }
    for (int j = 1; j <= m; ++j) {
        Rat num = p32(m + 1 - j) *
                  prod_skip(1, m, m + 1 - j, [&](int k) -> Rat { return q(k, 2 * m); }) *
                  prod(m + 1, m + j - 1, [&](int k) -> Rat { return q(m + 1 - j, k); });
        Rat den = (c[m - j] - c[2 * m - 1]) *
                  prod(m + 1, 2 * m - 1,
                       [&](int k) -> Rat { return c[k - 1] - c[2 * m - 1]; }) *
                  prod(m + 2 - j, m, [&](int k) -> Rat { return c[m - j] - c[k - 1]; });
        v[m + j - 1] = neg_pow(m + 1) * num / den;
    }
    return v;
}

Vec even_eigvec_B(const TripleSpectrum& s, int i) {
    const int m = s.kind.m;
    const int n = 2 * m;
    const auto& b = s.b;
    const auto& c = s.c;
    const Rat a1 = s.a[0], a2 = s.a[1];
    auto q = [&](int u, int v_) -> Rat { return q_form(s, u, v_); };
    auto p31 = [&](int k) -> Rat { return p_form(s, k, 3, 1); };
    const RigidTriple t = build_even(s);
    Vec w(n, Rat(0));
    if (i == 1) {
        w[0] = 1;
        return w;
    }
    if (i <= m) {
        const int ii = i - 1;
        w[0] = -t.B(0, ii) / (b[0] - b[1]);
        w[ii] = 1;
        return w;
    }
    const int ii = i - m;  // 1..m
    Rat x = neg_pow(m + 1 - ii) * p31(m + 1 - ii) *
            (b[0] + b[1] + c[m - ii] + c[2 * m - 1] - a1 - a2) /
            ((b[0] - b[2]) * (b[1] - b[2])) *
            prod(m + ii, 2 * m - 1, [&](int k) -> Rat { return q(m + 1 - ii, k); }) /
            prod(1, m - ii, [&](int k) -> Rat { return c[k - 1] - c[m - ii]; });
    w[0] = x;
    for (int j = 1; j < m; ++j) w[j] = -t.B(j, m + ii - 1) / (b[1] - b[2]);
    w[m + ii - 1] = 1;
    return w;
}

Rat even_gram(const TripleSpectrum& s, int i) {
    const int m = s.kind.m;
    const auto& c = s.c;
    auto q = [&](int u, int v_) -> Rat { return q_form(s, u, v_); };
    Rat num = prod(i + 1, 2 * m, [&](int k) -> Rat { return c[i - 1] - c[k - 1]; }) *
              prod_skip(2 * m + 1 - i, 2 * m, i, [&](int k) -> Rat { return q(i, k); }) *
              p_form(s, i, 3, 1);
    Rat den = prod(1, i - 1, [&](int k) -> Rat { return c[i - 1] - c[k - 1]; }) *
              prod_skip(1, 2 * m - i, i, [&](int k) -> Rat { return q(i, k); });
    if (i <= m)
        den *= p_form(s, i, 3, 2);
    else
        num *= p_form(s, i, 3, 2);
    return num / den;
}

Vec odd_eigvec_C(const TripleSpectrum& s, int i) {
    const int m = s.kind.m;
    const int n = 2 * m + 1;
    const auto& c = s.c;
    auto q = [&](int u, int v_) -> Rat { return q_form(s, u, v_); };
    auto p21 = [&](int k) -> Rat { return p_form(s, k, 2, 1); };
    Vec v(n, Rat(0));
    v[n - i] = 1;  // pivot at coordinate 2m+2-i
    if (i <= m) return v;
    if (i <= 2 * m) {
        const int ii = i - m;  // 1..m
        for (int j = 1; j <= m; ++j) {
            Rat num = p21(m + ii) *
                      prod_skip(m + 1, m + j, m + ii,
                                [&](int k) -> Rat { return q(m + 1 - j, k); }) *
                      prod_skip(m + 2 - ii, m, m + 1 - j,
                                [&](int k) -> Rat { return q(k, m + ii); });
            Rat den = (c[m - j] - c[m + ii - 1]) *
                      prod(m + 2 - j, m, [&](int k) -> Rat { return c[m - j] - c[k - 1]; }) *
                      prod(m + 1, m + ii - 1,
                           [&](int k) -> Rat { return c[k - 1] - c[m + ii - 1]; });
            v[m + j] = neg_pow(ii) * num / den;
        }
        return v;
    }
    for (int i_ = 1; i_ <= m; ++i_) {
        Rat num = prod(1, i_, [&](int k) -> Rat { return q(k, 2 * m + 1 - i_); });
        Rat den = prod(2 * m + 2 - i_, 2 * m + 1,
                       [&](int k) -> Rat { return c[2 * m - i_] - c[k - 1]; });
        v[i_] = num / den;
    }
    for (int j = 1; j <= m; ++j) {
        Rat num = p21(2 * m + 1) *
                  prod_skip(1, m, m + 1 - j, [&](int k) -> Rat { return q(k, 2 * m + 1); }) *
                  prod(m + 1, m + j, [&](int k) -> Rat { return q(m + 1 - j, k); });
        Rat den = (c[m - j] - c[2 * m]) *
                  prod(m + 1, 2 * m, [&](int k) -> Rat { return c[k - 1] - c[2 * m]; }) *
                  prod(m + 2 - j, m, [&](int k) -> Rat { return c[m - j] - c[k - 1]; });
        v[m + j] = neg_pow(m) * num / den;
    }
    return v;
}

Rat odd_gram(const TripleSpectrum& s, int i) {
    const int m = s.kind.m;
    const int n = 2 * m + 1;
    const auto& c = s.c;
    auto q = [&](int u, int v_) -> Rat { return q_form(s, u, v_); };
    Rat num = prod(i + 1, n, [&](int k) -> Rat { return c[i - 1] - c[k - 1]; }) *
              prod_skip(2 * m + 2 - i, n, i, [&](int k) -> Rat { return q(i, k); }) *
              p_form(s, i, 3, 1);
    Rat den = prod(1, i - 1, [&](int k) -> Rat { return c[i - 1] - c[k - 1]; }) *
              prod_skip(1, 2 * m + 1 - i, i, [&](int k) -> Rat { return q(i, k); });
    if (i <= m)
        den *= p_form(s, i, 2, 1);
    else
        num *= p_form(s, i, 2, 1);
    return num / den;
}

Vec extra_eigvec_C(const TripleSpectrum& s, int i) {
    auto p = [&](int u, int v_) -> Rat { return p_extra_form(s, u, v_); };
    auto q = [&](int u, int v_, int w) -> Rat { return q_extra_form(s, u, v_, w); };
    auto d = [&](int k, int l) -> Rat { return s.c[k - 1] - s.c[l - 1]; };
    Vec v(6, Rat(0));
    switch (i) {
        case 1:
            v[5] = 1;
            break;
        case 2:
            v[4] = 1;
            break;
        case 3:
            v[3] = 1;
            v[4] = p(3, 2) / d(2, 3);
            v[5] = p(3, 1) * q(2, 3, 6) / (d(1, 2) * d(1, 3));
            break;
        case 4:
            v[2] = 1;
            v[4] = -p(3, 2) * q(2, 3, 5) / (d(2, 4) * d(3, 4));
            v[5] = -p(3, 1) * q(2, 4, 5) * q(2, 4, 6) / (d(1, 2) * d(1, 4) * d(3, 4));
            break;
        case 5:
            v[1] = 1;
            v[2] = p(2, 4) / d(4, 5);
            v[3] = p(2, 3) * q(2, 4, 5) / (d(3, 4) * d(3, 5));
            v[4] = -p(2, 5) * p(3, 2) * q(2, 3, 4) / (d(2, 5) * d(3, 5) * d(4, 5));
            v[5] = -p(2, 5) * p(3, 1) * q(2, 4, 5) * q(2, 5, 6) /
                   (d(1, 2) * d(1, 5) * d(3, 5) * d(4, 5));
            break;
        case 6:
            v[0] = 1;
            v[2] = p(2, 4) * q(2, 3, 6) / (d(4, 6) * d(5, 6));
            v[3] = p(2, 3) * q(2, 3, 5) * q(2, 4, 6) / (d(3, 4) * d(3, 6) * d(5, 6));
            v[4] = -p(2, 6) * p(3, 2) * q(2, 3, 4) * q(2, 3, 5) /
                   (d(2, 6) * d(3, 6) * d(4, 6) * d(5, 6));
            v[5] = -p(2, 6) * p(3, 1) * q(2, 3, 6) * q(2, 4, 6) * q(2, 5, 6) /
                   (d(1, 2) * d(1, 6) * d(3, 6) * d(4, 6) * d(5, 6));
            break;
        default:
            throw DimensionMismatch("extra_eigvec_C: i out of range");
    }
    return v;
}

Rat extra_gram(const TripleSpectrum& s, int i) {
    auto p = [&](int u, int v_) -> Rat { return p_extra_form(s, u, v_); };
    auto q = [&](int u, int v_, int w) -> Rat { return q_extra_form(s, u, v_, w); };
    auto d = [&](int k, int l) -> Rat { return s.c[k - 1] - s.c[l - 1]; };
    switch (i) {
        case 1:
            return -d(1, 2) * d(1, 3) * d(1, 4) * d(1, 5) * d(1, 6) /
                   (p(1, 1) * p(2, 1) * p(3, 1));
        case 2:
            return d(2, 3) * d(2, 4) * d(2, 5) * d(2, 6) /
                   (d(2, 1) * p(1, 2) * p(2, 2) * p(3, 2)) * q(1, 3, 4) *
                   q(1, 3, 5) * q(1, 3, 6) * q(1, 4, 5) / (q(1, 4, 6) * q(1, 5, 6));
        case 3:
            return d(3, 4) * d(3, 5) * d(3, 6) * p(3, 3) /
                   (d(3, 1) * d(3, 2) * p(1, 3) * p(2, 3)) * q(1, 2, 4) *
                   q(1, 2, 5) * q(1, 2, 6) * q(1, 4, 5) / (q(1, 4, 6) * q(1, 5, 6));
        case 4:
            return d(4, 5) * d(4, 6) * p(3, 4) /
                   (d(4, 1) * d(4, 2) * d(4, 3) * p(1, 4) * p(2, 4)) * q(1, 2, 3) *
                   q(1, 2, 5) * q(1, 2, 6) * q(1, 3, 5) * q(1, 3, 6) / q(1, 5, 6);
        case 5:
            return d(5, 6) * p(2, 5) * p(3, 5) /
                   (d(5, 1) * d(5, 2) * d(5, 3) * d(5, 4) * p(1, 5)) * q(1, 2, 3) *
                   q(1, 2, 4) * q(1, 2, 6) * q(1, 3, 4) * q(1, 3, 6) / q(1, 4, 6);
        case 6:
            return p(2, 6) * p(3, 6) /
                   (d(6, 1) * d(6, 2) * d(6, 3) * d(6, 4) * d(6, 5) * p(1, 6)) *
                   q(1, 2, 3) * q(1, 2, 4) * q(1, 2, 5) * q(1, 3, 4) * q(1, 3, 5) *
                   q(1, 4, 5);
        default:
            throw DimensionMismatch("extra_gram: i out of range");
    }
}

EigenSystem eigenvectors(const RigidTriple& t) {
    const TripleSpectrum& s = t.spectrum;
    const int n = s.kind.n();
    EigenSystem es;
    std::vector<Vec> cols;
    switch (s.kind.tag) {
        case Family::Hypergeometric:
            for (int i = 1; i <= n; ++i) {
                cols.push_back(hg_eigvec_B(s, i));
                es.eigenvalue_of_column.push_back(s.b[i - 1]);
            }
            break;
        case Family::Even:
            for (int i = 1; i <= n; ++i) {
                cols.push_back(even_eigvec_C(s, i));
                es.eigenvalue_of_column.push_back(s.c[i - 1]);
            }
            {
                std::vector<Vec> wcols;
                for (int i = 1; i <= n; ++i) {
                    wcols.push_back(even_eigvec_B(s, i));
                    const int m = s.kind.m;
                    es.eigenvalue_of_column_B.push_back(
                        i == 1 ? s.b[0] : (i <= m ? s.b[1] : s.b[2]));
                }
                es.vectors_B = columns_to_mat(wcols);
            }
            break;
        case Family::Odd:
            for (int i = 1; i <= n; ++i) {
                cols.push_back(odd_eigvec_C(s, i));
                es.eigenvalue_of_column.push_back(s.c[i - 1]);
            }
            break;
        case Family::ExtraE8hat:
            for (int i = 1; i <= n; ++i) {
                cols.push_back(extra_eigvec_C(s, i));
                es.eigenvalue_of_column.push_back(s.c[i - 1]);
            }
            break;
        case Family::E8:
            for (const auto& [lam, mult] : s.c_eigs()) {
                Mat shifted = t.C;
                for (int d = 0; d < 6; ++d) shifted(d, d) -= lam;
                auto ker = kernel(shifted);
                if (int(ker.size()) != mult)
                    throw DegenerateSpectrum("e8 eigenspace dimension mismatch");
                for (auto& v : ker) {
                    cols.push_back(v);
                    es.eigenvalue_of_column.push_back(lam);
                }
            }
            break;
    }
    es.vectors = columns_to_mat(cols);
    return es;
}

bool check_self_adjoint(const Mat& m, const Mat& g) {
    return g * m == m.transpose() * g;
}

std::vector<Mat> invariant_form_basis(const Mat& b, const Mat& c) {
    const int n = b.rows();
    std::map<std::pair<int, int>, int> idx;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) idx[{i, j}] = int(idx.size());
    const int nv = int(idx.size());
    auto gij = [&](int i, int j) -> int { return i <= j ? idx[{i, j}] : idx[{j, i}]; };
    Mat sys(2 * n * n, nv);
    int r = 0;
    for (const Mat* mp : {&b, &c}) {
        const Mat& m = *mp;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j, ++r)
                for (int k = 0; k < n; ++k) {
                    sys(r, gij(i, k)) += m(k, j);
                    sys(r, gij(k, j)) -= m(k, i);
                }
    }
    std::vector<Mat> mats;
    for (const Vec& vec : kernel(sys)) {
        Mat g(n, n);
        for (const auto& [ij, t] : idx) {
            g(ij.first, ij.second) = vec[t];
            g(ij.second, ij.first) = vec[t];
        }
        mats.push_back(g);
    }
    return mats;
}

int check_form_uniqueness(const RigidTriple& t) {
    return int(invariant_form_basis(t.B, t.C).size());
}

InvariantForm invariant_form(const RigidTriple& t, const EigenSystem& es) {
    const TripleSpectrum& s = t.spectrum;
    const int n = s.kind.n();
    InvariantForm f;
    if (s.kind.tag == Family::E8) {
        auto basis = invariant_form_basis(t.B, t.C);
        if (basis.size() != 1)
            throw DegenerateForm("invariant form space is not one-dimensional");
        Mat g = basis[0];
        // Scale so the first nonzero entry in reading order equals 1.
        Rat pivot = 0;
        for (int i = 0; i < n && pivot == 0; ++i)
            for (int j = 0; j < n && pivot == 0; ++j)
                if (g(i, j) != 0) pivot = g(i, j);
        if (pivot == 0) throw DegenerateForm("invariant form vanished");
        g = (Rat(1) / pivot) * g;
        f.G = g;
        Mat d = es.vectors.transpose() * g * es.vectors;
        // Distinct eigenvalues are orthogonal automatically; orthogonalize the
        // two columns of the repeated eigenvalue when the leading entry allows.
        if (d(4, 5) != 0 && d(4, 4) != 0) {
            Mat u = Mat::identity(n);
            u(4, 5) = -d(4, 5) / d(4, 4);
            d = u.transpose() * d * u;
        }
        for (int i = 0; i < n; ++i) f.gram.push_back(d(i, i));
        f.degenerate = rank(g) < n;
        return f;
    }
    for (int i = 1; i <= n; ++i) {
        switch (s.kind.tag) {
            case Family::Hypergeometric:
                f.gram.push_back(hg_gram(s, i));
                break;
            case Family::Even:
                f.gram.push_back(even_gram(s, i));
                break;
            case Family::Odd:
                f.gram.push_back(odd_gram(s, i));
                break;
            default:
                f.gram.push_back(extra_gram(s, i));
                break;
        }
    }
    if (s.kind.tag == Family::Hypergeometric) {
        const int m = s.kind.m;
        const Rat a2 = s.a[1];
        for (int i = 1; i <= m; ++i) {
            Rat si = prod(1, i - 1, [&](int k) -> Rat {
                return (s.b[i - 1] + s.c[m - k] - a2) / (s.b[i - 1] - s.b[k - 1]);
            });
            Rat xi = (s.b[i - 1] + s.c[m - i] - a2) *
                     prod(1, m - i, [&](int k) -> Rat {
                         return (s.b[i - 1] + s.c[m - i - k] - a2) /
                                (s.b[i - 1] - s.b[i + k - 1]);
                     });
            f.hg_aux_s.push_back(si);
            f.hg_aux_x.push_back(xi);
        }
    }
    Mat vinv = inverse(es.vectors);
    Mat d(n, n);
    for (int i = 0; i < n; ++i) d(i, i) = f.gram[i];
    f.G = vinv.transpose() * d * vinv;
    for (const Rat& g : f.gram)
        if (g == 0) f.degenerate = true;
    return f;
}

IrreducibilityReport check_irreducible_report(const RigidTriple& t) {
    const int n = t.B.rows();
    const int nn = n * n;
    auto flatten = [&](const Mat& m) {
        Vec v(nn);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) v[size_t(i) * n + j] = m(i, j);
        return v;
    };
    // Incremental reduced echelon basis, pivot column -> reduced vector.
    std::map<int, Vec> basis;
    auto insert = [&](Vec v) -> bool {
        for (auto& [p, w] : basis)
            if (v[p] != 0) {
                Rat c = v[p];
                for (int k = 0; k < nn; ++k) v[k] -= c * w[k];
            }
        int p = -1;
        for (int k = 0; k < nn; ++k)
            if (v[k] != 0) {
                p = k;
                break;
            }
        if (p < 0) return false;
        Rat c = v[p];
        for (int k = 0; k < nn; ++k) v[k] /= c;
        for (auto& [q, w] : basis)
            if (w[p] != 0) {
                Rat c2 = w[p];
                for (int k = 0; k < nn; ++k) w[k] -= c2 * v[k];
            }
        basis[p] = std::move(v);
        return true;
    };
    auto unflatten = [&](const Vec& v) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m(i, j) = v[size_t(i) * n + j];
        return m;
    };
    std::vector<Mat> work = {Mat::identity(n), t.B, t.C};
    std::vector<Mat> queue;
    for (const Mat& m : work)
        if (insert(flatten(m))) queue.push_back(m);
    while (!queue.empty() && int(basis.size()) < nn) {
        std::vector<Mat> next;
        for (const Mat& m : queue) {
            for (const Mat* gen : {&t.B, &t.C}) {
                Mat prod_lr = m * *gen;
                if (insert(flatten(prod_lr))) next.push_back(prod_lr);
                Mat prod_rl = *gen * m;
                if (insert(flatten(prod_rl))) next.push_back(prod_rl);
            }
            if (int(basis.size()) == nn) break;
        }
        queue = std::move(next);
    }
    (void)unflatten;
    return {int(basis.size()) == nn, int(basis.size())};
}

bool check_irreducible(const RigidTriple& t) {
    return check_irreducible_report(t).irreducible;
}

HgRankOneCertificate hg_rank_one_certificate(const RigidTriple& t) {
    const TripleSpectrum& s = t.spectrum;
    if (s.kind.tag != Family::Hypergeometric)
        throw DimensionMismatch("rank-one certificate is hypergeometric-only");
    const int m = s.kind.m;
    const Rat a2 = s.a[1];
    HgRankOneCertificate cert;
    for (int j = 1; j <= m; ++j)
        cert.i_vec.push_back(s.b[j - 1] + s.c[m - j] - a2);
    for (int i = 1; i <= m; ++i) {
        cert.s.push_back(prod(1, i - 1, [&](int k) -> Rat {
            return (s.b[i - 1] + s.c[m - k] - a2) / (s.b[i - 1] - s.b[k - 1]);
        }));
        cert.x.push_back((s.b[i - 1] + s.c[m - i] - a2) *
                         prod(1, m - i, [&](int k) -> Rat {
                             return (s.b[i - 1] + s.c[m - i - k] - a2) /
                                    (s.b[i - 1] - s.b[i + k - 1]);
                         }));
    }
    return cert;
}

}  // namespace rt
