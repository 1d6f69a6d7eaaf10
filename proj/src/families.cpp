#include "rt/families.hpp"

#include <functional>

#include "rt/errors.hpp"

namespace rt {

namespace {

// Product of f(k) for k in [lo, hi] (1-based, empty when lo > hi).
Rat prod(int lo, int hi, const std::function<Rat(int)>& f) {
    Rat p = 1;
    for (int k = lo; k <= hi; ++k) p *= f(k);
    return p;
}

Rat prod_skip(int lo, int hi, int skip, const std::function<Rat(int)>& f) {
    Rat p = 1;
    for (int k = lo; k <= hi; ++k)
        if (k != skip) p *= f(k);
    return p;
}

int neg_pow(int e) { return (e % 2 + 2) % 2 == 0 ? 1 : -1; }

RigidTriple finish(const TripleSpectrum& s, Mat B, Mat C) {
    RigidTriple t;
    t.spectrum = s;
    t.A = B + C;
    t.B = std::move(B);
    t.C = std::move(C);
    return t;
}

}  // namespace

RigidTriple build_hypergeometric(const TripleSpectrum& s) {
    int m = s.kind.m;
    const Rat& a2 = s.a[1];
    Mat B(m, m), C(m, m);
    for (int i = 1; i <= m; ++i) {
        B(i - 1, i - 1) = s.b[i - 1];
        C(i - 1, i - 1) = s.c[m - i];
        for (int j = 1; j <= m; ++j) {
            if (j > i)
                B(i - 1, j - 1) = s.b[i - 1] + s.c[m - i] - a2;
            else if (j < i)
                C(i - 1, j - 1) = s.b[i - 1] + s.c[m - i] - a2;
        }
    }
    return finish(s, std::move(B), std::move(C));
}

RigidTriple build_even(const TripleSpectrum& s) {
    int m = s.kind.m;
    int n = 2 * m;
    auto q = [&](int i, int j) -> Rat { return q_form(s, i, j); };
    auto p31 = [&](int i) -> Rat { return p_form(s, i, 3, 1); };
    auto p32 = [&](int i) -> Rat { return p_form(s, i, 3, 2); };
    auto cd = [&](int k, int l) -> Rat { return s.c[k - 1] - s.c[l - 1]; };
    Mat B(n, n), C(n, n);
    B(0, 0) = s.b[0];
    C(0, 0) = s.c[n - 1];
    for (int i = 1; i < m; ++i) {
        B(i, i) = s.b[1];
        C(i, i) = s.c[2 * m - i - 1];
    }
    for (int i = 1; i <= m; ++i) {
        B(m + i - 1, m + i - 1) = s.b[2];
        C(m + i - 1, m + i - 1) = s.c[m - i];
    }
    for (int j = 1; j < m; ++j) {
        Rat num = prod(j + 1, m, [&](int k) -> Rat { return q(k, 2 * m - j); });
        Rat den = prod(m + 1, 2 * m - j - 1, [&](int k) -> Rat { return cd(k, 2 * m - j); });
        B(0, j) = neg_pow(m + 1 - j) * num / den;
    }
    for (int j = 1; j <= m; ++j) {
        Rat num = p31(m + 1 - j) *
                  prod(m + j, 2 * m - 1, [&](int k) -> Rat { return q(m + 1 - j, k); });
        Rat den = prod(1, m - j, [&](int k) -> Rat { return cd(k, m + 1 - j); });
        B(0, m + j - 1) = neg_pow(m - j) * num / den;
    }
    for (int i = 1; i < m; ++i)
        for (int j = 1; j <= m; ++j) {
            Rat num = p31(m + 1 - j) *
                      prod_skip(1, i, m + 1 - j, [&](int k) -> Rat { return q(k, 2 * m - i); }) *
                      prod_skip(m + j, 2 * m - 1, 2 * m - i,
                                [&](int k) -> Rat { return q(m + 1 - j, k); });
            Rat den = prod(2 * m + 1 - i, 2 * m - 1,
                           [&](int k) -> Rat { return cd(2 * m - i, k); }) *
                      prod(1, m - j, [&](int k) -> Rat { return cd(k, m + 1 - j); });
            B(i, m + j - 1) = neg_pow(m - j) * num / den;
        }
    for (int i = 1; i < m; ++i) {
        Rat num = prod(1, i, [&](int k) -> Rat { return q(k, 2 * m - i); });
        Rat den = prod(2 * m + 1 - i, 2 * m - 1,
                       [&](int k) -> Rat { return cd(2 * m - i, k); });
        C(i, 0) = -num / den;
    }
    for (int i = 1; i <= m; ++i) {
        Rat num = p32(m + 1 - i) *
                  prod(m + 1, m + i - 1, [&](int k) -> Rat { return q(m + 1 - i, k); });
        Rat den = prod(m + 2 - i, m, [&](int k) -> Rat { return cd(m + 1 - i, k); });
        C(m + i - 1, 0) = -num / den;
    }
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j < m; ++j) {
            Rat num = p32(m + 1 - i) *
                      prod_skip(m + 1, m + i - 1, 2 * m - j,
                                [&](int k) -> Rat { return q(m + 1 - i, k); }) *
                      prod_skip(j + 1, m, m + 1 - i,
                                [&](int k) -> Rat { return q(k, 2 * m - j); });
            Rat den = prod(m + 2 - i, m, [&](int k) -> Rat { return cd(m + 1 - i, k); }) *
                      prod(m + 1, 2 * m - j - 1, [&](int k) -> Rat { return cd(k, 2 * m - j); });
            C(m + i - 1, j) = neg_pow(m + 1 - j) * num / den;
        }
    return finish(s, std::move(B), std::move(C));
}

RigidTriple build_odd(const TripleSpectrum& s) {
    int m = s.kind.m;
    int n = 2 * m + 1;
    auto q = [&](int i, int j) -> Rat { return q_form(s, i, j); };
    auto p31 = [&](int i) -> Rat { return p_form(s, i, 3, 1); };
    auto p21 = [&](int i) -> Rat { return p_form(s, i, 2, 1); };
    auto cd = [&](int k, int l) -> Rat { return s.c[k - 1] - s.c[l - 1]; };
    Mat B(n, n), C(n, n);
    B(0, 0) = s.b[0];
    C(0, 0) = s.c[n - 1];
    for (int i = 1; i <= m; ++i) {
        B(i, i) = s.b[1];
        C(i, i) = s.c[2 * m - i];
        B(m + i, m + i) = s.b[2];
        C(m + i, m + i) = s.c[m - i];
    }
    for (int j = 1; j <= m; ++j) {
        Rat num = p21(2 * m + 1 - j) *
                  prod(j + 1, m, [&](int k) -> Rat { return q(k, 2 * m + 1 - j); });
        Rat den = prod(m + 1, 2 * m - j, [&](int k) -> Rat { return cd(k, 2 * m + 1 - j); });
        B(0, j) = neg_pow(m - j) * num / den;
    }
    for (int j = 1; j <= m; ++j) {
        Rat num = p31(m + 1 - j) *
                  prod(m + 1 + j, 2 * m, [&](int k) -> Rat { return q(m + 1 - j, k); });
        Rat den = prod(1, m - j, [&](int k) -> Rat { return cd(k, m + 1 - j); });
        B(0, m + j) = neg_pow(m - j) * num / den;
    }
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j) {
            Rat num = p31(m + 1 - j) *
                      prod_skip(1, i, m + 1 - j,
                                [&](int k) -> Rat { return q(k, 2 * m + 1 - i); }) *
                      prod_skip(m + 1 + j, 2 * m, 2 * m + 1 - i,
                                [&](int k) -> Rat { return q(m + 1 - j, k); });
            Rat den = prod(2 * m + 2 - i, 2 * m,
                           [&](int k) -> Rat { return cd(2 * m + 1 - i, k); }) *
                      prod(1, m - j, [&](int k) -> Rat { return cd(k, m + 1 - j); });
            B(i, m + j) = neg_pow(m - j) * num / den;
        }
    for (int i = 1; i <= m; ++i) {
        Rat num = prod(1, i, [&](int k) -> Rat { return q(k, 2 * m + 1 - i); });
        Rat den = prod(2 * m + 2 - i, 2 * m,
                       [&](int k) -> Rat { return cd(2 * m + 1 - i, k); });
        C(i, 0) = -num / den;
    }
    for (int i = 1; i <= m; ++i) {
        Rat num = prod(m + 1, m + i, [&](int k) -> Rat { return q(m + 1 - i, k); });
        Rat den = prod(m + 2 - i, m, [&](int k) -> Rat { return cd(m + 1 - i, k); });
        C(m + i, 0) = -num / den;
    }
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j) {
            Rat num = p21(2 * m + 1 - j) *
                      prod_skip(m + 1, m + i, 2 * m + 1 - j,
                                [&](int k) -> Rat { return q(m + 1 - i, k); }) *
                      prod_skip(j + 1, m, m + 1 - i,
                                [&](int k) -> Rat { return q(k, 2 * m + 1 - j); });
            Rat den = prod(m + 2 - i, m, [&](int k) -> Rat { return cd(m + 1 - i, k); }) *
                      prod(m + 1, 2 * m - j, [&](int k) -> Rat { return cd(k, 2 * m + 1 - j); });
            C(m + i, j) = neg_pow(m - j) * num / den;
        }
    return finish(s, std::move(B), std::move(C));
}

RigidTriple build_extra(const TripleSpectrum& s) {
    auto p = [&](int i, int j) -> Rat { return p_extra_form(s, i, j); };
    auto q = [&](int i, int j, int k) -> Rat { return q_extra_form(s, i, j, k); };
    auto d = [&](int k, int l) -> Rat { return s.c[k - 1] - s.c[l - 1]; };
    const auto& b = s.b;
    const auto& c = s.c;
    Mat B(6, 6), C(6, 6);
    B(0, 0) = b[0];
    B(0, 2) = -p(1, 6) * q(2, 4, 5) / d(3, 4);
    B(0, 3) = p(1, 6);
    B(0, 4) = p(1, 6) * q(2, 4, 5) / d(1, 2);
    B(0, 5) = p(1, 6);
    B(1, 1) = b[0];
    B(1, 2) = p(1, 5) * q(2, 3, 5) * q(2, 4, 6) / (d(3, 4) * d(5, 6));
    B(1, 3) = -p(1, 5) * q(2, 3, 6) / d(5, 6);
    B(1, 4) = -p(1, 5) * q(2, 3, 6) * q(2, 4, 6) / (d(1, 2) * d(5, 6));
    B(1, 5) = -p(1, 5) * q(2, 3, 5) / d(5, 6);
    B(2, 2) = b[1];
    B(2, 4) = -p(2, 4) * q(2, 3, 6) / d(1, 2);
    B(2, 5) = p(2, 4);
    B(3, 3) = b[1];
    B(3, 4) = -p(2, 3) * q(2, 4, 5) * q(2, 4, 6) / (d(1, 2) * d(3, 4));
    B(3, 5) = p(2, 3) * q(2, 3, 5) / d(3, 4);
    B(4, 4) = b[2];
    B(5, 5) = b[2];
    C(0, 0) = c[5];
    C(1, 1) = c[4];
    C(2, 0) = -p(2, 4) * q(2, 3, 6) / d(5, 6);
    C(2, 1) = -p(2, 4);
    C(2, 2) = c[3];
    C(3, 0) = -p(2, 3) * q(2, 3, 5) * q(2, 4, 6) / (d(3, 4) * d(5, 6));
    C(3, 1) = -p(2, 3) * q(2, 4, 5) / d(3, 4);
    C(3, 3) = c[2];
    C(4, 0) = -p(3, 2) * q(2, 3, 5) / d(5, 6);
    C(4, 1) = -p(3, 2);
    C(4, 2) = p(3, 2) * q(2, 3, 5) / d(3, 4);
    C(4, 3) = -p(3, 2);
    C(4, 4) = c[1];
    C(5, 0) = p(3, 1) * q(2, 3, 6) * q(2, 4, 6) / (d(1, 2) * d(5, 6));
    C(5, 1) = p(3, 1) * q(2, 4, 5) / d(1, 2);
    C(5, 2) = p(3, 1) * q(2, 4, 5) * q(2, 4, 6) / (d(1, 2) * d(3, 4));
    C(5, 3) = -p(3, 1) * q(2, 3, 6) / d(1, 2);
    C(5, 5) = c[0];
    return finish(s, std::move(B), std::move(C));
}

RigidTriple build_e8(const TripleSpectrum& s) {
    const Rat &a1 = s.a[0], &a2 = s.a[1];
    const Rat &b1 = s.b[0], &b2 = s.b[1], &b3 = s.b[2];
    const Rat &c1 = s.c[0], &c2 = s.c[1], &c3 = s.c[2], &c4 = s.c[3], &c5 = s.c[4];
    Rat u = a1 + a2 - b1 - b3 - c1 - c5;
    Rat v = -a1 - 2 * a2 + b1 + b2 + b3 + c1 + c3 + c5;
    Rat w = a1 + a2 - b1 - b2 - c4 - c5;
    Mat B(6, 6), C(6, 6);
    B(0, 0) = b1;
    B(0, 3) = u;
    B(0, 4) = -u;
    B(0, 5) = -a2 + b3 + c1;
    B(1, 1) = b1;
    B(1, 2) = a1 - b1 - c5;
    B(1, 3) = v;
    B(1, 4) = -a1 - a2 + b2 + b3 + c2 + c4;
    B(1, 5) = -v;
    B(2, 2) = b2;
    B(2, 4) = -a1 + b2 + c4;
    B(2, 5) = -v;
    B(3, 3) = b2;
    B(3, 4) = 2 * a1 + a2 - b1 - 2 * b2 - c3 - c4 - c5;
    B(3, 5) = -a2 + b3 + c1;
    B(4, 4) = b3;
    B(5, 5) = b3;
    C(0, 0) = c5;
    C(1, 1) = c5;
    C(2, 0) = v;
    C(2, 1) = a1 - b2 - c4;
    C(2, 2) = c4;
    C(3, 0) = a1 + a2 - b2 - b3 - c1 - c3;
    C(3, 1) = -w;
    C(3, 2) = w;
    C(3, 3) = c3;
    C(4, 0) = -v;
    C(4, 1) = -w;
    C(4, 2) = w;
    C(4, 3) = v;
    C(4, 4) = c2;
    C(5, 0) = -a2 + b1 + c5;
    C(5, 3) = u;
    C(5, 4) = -u;
    C(5, 5) = c1;
    return finish(s, std::move(B), std::move(C));
}

RigidTriple build(const TripleSpectrum& s) {
    switch (s.kind.tag) {
        case Family::Hypergeometric: return build_hypergeometric(s);
        case Family::Even: return build_even(s);
        case Family::Odd: return build_odd(s);
        case Family::ExtraE8hat: return build_extra(s);
        case Family::E8: return build_e8(s);
    }
    throw SchemaError("unknown family");
}

RigidTriple normalize(const RigidTriple& t, const Rat& k, const Rat& theta,
                      const Rat& phi) {
    if (k == 0) throw ZeroScale("normalize needs k != 0");
    int n = t.A.rows();
    RigidTriple out;
    out.A = k * t.A + theta * Mat::identity(n);
    out.B = k * t.B + phi * Mat::identity(n);
    out.C = k * t.C + (theta - phi) * Mat::identity(n);
    out.spectrum = t.spectrum;
    for (Rat& x : out.spectrum.a) x = k * x + theta;
    for (Rat& x : out.spectrum.b) x = k * x + phi;
    for (Rat& x : out.spectrum.c) x = k * x + (theta - phi);
    return out;
}

EvenNormalization even_normalization(const TripleSpectrum& s) {
    int m = s.kind.m;
    EvenNormalization nz;
    nz.k = Rat(2) / (s.a[0] - s.a[1]);
    nz.theta = -(s.a[0] + s.a[1]) / 2;
    nz.phi = -(s.b[0] + (m - 1) * s.b[1] + m * s.b[2]) / (2 * m);
    // Consistency of theta and phi with the trace condition makes the
    // normalized triple traceless; scale by k afterwards.
    nz.theta *= nz.k;
    nz.phi *= nz.k;
    return nz;
}

}  // namespace rt
