#include "rt/matrix.hpp"

namespace rt {

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

bool Mat::is_zero() const {
    for (const Rat& x : e_)
        if (x != 0) return false;
    return true;
}

bool Mat::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

Mat Mat::transpose() const {
    Mat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

static void check_same_shape(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionMismatch("matrix shapes differ");
}

Mat operator+(const Mat& a, const Mat& b) {
    check_same_shape(a, b);
    Mat c(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
    return c;
}

Mat operator-(const Mat& a, const Mat& b) {
    check_same_shape(a, b);
    Mat c(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
    return c;
}

Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols() != b.rows()) throw DimensionMismatch("inner dimensions differ");
    Mat c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const Rat& aik = a(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

Mat operator*(const Rat& s, const Mat& a) {
    Mat c(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) c(i, j) = s * a(i, j);
    return c;
}

Vec operator*(const Mat& a, const Vec& v) {
    if (a.cols() != int(v.size())) throw DimensionMismatch("matrix-vector shapes");
    Vec r(a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r[i] += a(i, j) * v[j];
    return r;
}

// ---------------------------------------------------------------------------
// Fraction-free elimination.  Rows are first scaled to integers (this changes
// neither rank, kernel, nor solvability), then Bareiss keeps every
// intermediate value an exact integer with controlled growth.

namespace {

struct IntRows {
    std::vector<std::vector<mpz_class>> m;
    int rows, cols;
};

IntRows to_integer_rows(const Mat& a) {
    IntRows r{{}, a.rows(), a.cols()};
    r.m.resize(a.rows());
    for (int i = 0; i < a.rows(); ++i) {
        mpz_class l = 1;
        for (int j = 0; j < a.cols(); ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).get_den().get_mpz_t());
        r.m[i].resize(a.cols());
        for (int j = 0; j < a.cols(); ++j) {
            mpz_class q = l / a(i, j).get_den();
            r.m[i][j] = a(i, j).get_num() * q;
        }
    }
    return r;
}

// Bareiss row echelon; returns rank.
int bareiss_rank(IntRows& r) {
    int rank = 0;
    mpz_class prev = 1;
    for (int c = 0; c < r.cols && rank < r.rows; ++c) {
        int piv = -1;
        for (int i = rank; i < r.rows; ++i)
            if (r.m[i][c] != 0) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(r.m[rank], r.m[piv]);
        for (int i = rank + 1; i < r.rows; ++i) {
            for (int j = c + 1; j < r.cols; ++j) {
                mpz_class t = r.m[rank][c] * r.m[i][j] - r.m[i][c] * r.m[rank][j];
                mpz_divexact(r.m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            r.m[i][c] = 0;
        }
        prev = r.m[rank][c];
        ++rank;
    }
    return rank;
}

// Rational reduced row echelon form of [A | extra]; fills pivot column map.
struct Rref {
    std::vector<Vec> m;
    std::vector<int> pivot_of_col;  // -1 when free
    int rank;
};

Rref rref(const Mat& a, const Vec* rhs) {
    int n = a.rows(), mm = a.cols();
    int width = mm + (rhs ? 1 : 0);
    Rref r;
    r.m.assign(n, Vec(width));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < mm; ++j) r.m[i][j] = a(i, j);
        if (rhs) r.m[i][mm] = (*rhs)[i];
    }
    r.pivot_of_col.assign(mm, -1);
    int rk = 0;
    for (int c = 0; c < mm && rk < n; ++c) {
        int piv = -1;
        for (int i = rk; i < n; ++i)
            if (r.m[i][c] != 0) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(r.m[rk], r.m[piv]);
        Rat inv = 1 / r.m[rk][c];
        for (int j = c; j < width; ++j) r.m[rk][j] *= inv;
        for (int i = 0; i < n; ++i) {
            if (i == rk || r.m[i][c] == 0) continue;
            Rat f = r.m[i][c];
            for (int j = c; j < width; ++j) r.m[i][j] -= f * r.m[rk][j];
        }
        r.pivot_of_col[c] = rk;
        ++rk;
    }
    r.rank = rk;
    return r;
}

}  // namespace

int rank(const Mat& m) {
    IntRows r = to_integer_rows(m);
    return bareiss_rank(r);
}

std::vector<Vec> kernel(const Mat& a) {
    Rref r = rref(a, nullptr);
    std::vector<Vec> basis;
    for (int c = 0; c < a.cols(); ++c) {
        if (r.pivot_of_col[c] != -1) continue;
        Vec v(a.cols());
        v[c] = 1;
        for (int c2 = 0; c2 < a.cols(); ++c2)
            if (r.pivot_of_col[c2] != -1) v[c2] = -r.m[r.pivot_of_col[c2]][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vec> solve_linear(const Mat& a, const Vec& b) {
    if (int(b.size()) != a.rows()) throw DimensionMismatch("rhs length");
    Rref r = rref(a, &b);
    for (int i = r.rank; i < a.rows(); ++i)
        if (r.m[i][a.cols()] != 0) return std::nullopt;
    Vec x(a.cols());
    for (int c = 0; c < a.cols(); ++c)
        if (r.pivot_of_col[c] != -1) x[c] = r.m[r.pivot_of_col[c]][a.cols()];
    return x;
}

Mat inverse(const Mat& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("inverse of non-square");
    int n = m.rows();
    Mat inv(n, n);
    for (int j = 0; j < n; ++j) {
        Vec e(n);
        e[j] = 1;
        auto x = solve_linear(m, e);
        if (!x) throw DegenerateForm("singular matrix has no inverse");
        for (int i = 0; i < n; ++i) inv(i, j) = (*x)[i];
    }
    return inv;
}

std::vector<Rat> char_poly(const Mat& a) {
    if (a.rows() != a.cols()) throw DimensionMismatch("char_poly of non-square");
    int n = a.rows();
    std::vector<Rat> coeffs(n + 1);
    coeffs[n] = 1;
    Mat m = Mat::zero(n, n);
    for (int k = 1; k <= n; ++k) {
        m = a * m;
        for (int i = 0; i < n; ++i) m(i, i) += coeffs[n - k + 1];
        Mat am = a * m;
        Rat tr;
        for (int i = 0; i < n; ++i) tr += am(i, i);
        coeffs[n - k] = -tr / k;
    }
    return coeffs;
}

std::vector<Rat> poly_from_roots(const std::vector<Rat>& roots) {
    std::vector<Rat> c{Rat(1)};
    for (const Rat& r : roots) {
        c.insert(c.begin(), Rat(0));
        for (size_t i = 0; i + 1 < c.size(); ++i) c[i] -= r * c[i + 1];
    }
    return c;
}

bool verify_spectrum(const Mat& m, const std::vector<std::pair<Rat, int>>& eigs) {
    int n = m.rows();
    int total = 0;
    for (auto& [lam, mult] : eigs) total += mult;
    if (total != n) return false;
    Mat p = Mat::identity(n);
    for (auto& [lam, mult] : eigs) {
        (void)mult;
        p = p * (m - lam * Mat::identity(n));
    }
    if (!p.is_zero()) return false;
    for (auto& [lam, mult] : eigs)
        if (rank(m - lam * Mat::identity(n)) != n - mult) return false;
    return true;
}

Rat det(const Mat& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("det of non-square");
    // Rational Gaussian elimination with sign tracking.
    int n = m.rows();
    Mat a = m;
    Rat d = 1;
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int i = c; i < n; ++i)
            if (a(i, c) != 0) { piv = i; break; }
        if (piv < 0) return Rat(0);
        if (piv != c) {
            for (int j = 0; j < n; ++j) swap(a(c, j), a(piv, j));
            d = -d;
        }
        d *= a(c, c);
        Rat inv = 1 / a(c, c);
        for (int i = c + 1; i < n; ++i) {
            if (a(i, c) == 0) continue;
            Rat f = a(i, c) * inv;
            for (int j = c; j < n; ++j) a(i, j) -= f * a(c, j);
        }
    }
    return d;
}

}  // namespace rt
