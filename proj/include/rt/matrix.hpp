#ifndef RT_MATRIX_HPP
#define RT_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "rt/errors.hpp"
#include "rt/rat.hpp"

namespace rt {

// Dense exact-rational matrix with value semantics.  All operations return
// fresh matrices; nothing here mutates shared state, so concurrent use of
// distinct values is safe.
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols) : rows_(rows), cols_(cols), e_(size_t(rows) * cols) {}

    static Mat identity(int n);
    static Mat zero(int rows, int cols) { return Mat(rows, cols); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& operator()(int i, int j) { return e_[size_t(i) * cols_ + j]; }
    const Rat& operator()(int i, int j) const { return e_[size_t(i) * cols_ + j]; }

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    bool is_zero() const;
    bool is_symmetric() const;
    Mat transpose() const;

private:
    int rows_, cols_;
    std::vector<Rat> e_;
};

Mat operator+(const Mat& a, const Mat& b);
Mat operator-(const Mat& a, const Mat& b);
Mat operator*(const Mat& a, const Mat& b);
Mat operator*(const Rat& s, const Mat& a);

using Vec = std::vector<Rat>;

Vec operator*(const Mat& a, const Vec& v);

// Exact rank via fraction-free (Bareiss) elimination on the row-scaled
// integer matrix; row scaling changes neither rank nor kernel.
int rank(const Mat& m);

// Basis of the right kernel, one vector per free column.
std::vector<Vec> kernel(const Mat& m);

// One solution of A x = b, or nullopt when inconsistent.
std::optional<Vec> solve_linear(const Mat& a, const Vec& b);

// Inverse; throws DegenerateForm when singular.
Mat inverse(const Mat& m);

// Monic characteristic polynomial by Faddeev-LeVerrier; coefficient k of the
// result multiplies x^k, and the leading coefficient is 1.
std::vector<Rat> char_poly(const Mat& m);

// Coefficients (same layout) of prod (x - r) over the given roots.
std::vector<Rat> poly_from_roots(const std::vector<Rat>& roots);

// Annihilating-product + rank certificate: M is diagonalizable with exactly
// the claimed eigenvalues/multiplicities.
bool verify_spectrum(const Mat& m, const std::vector<std::pair<Rat, int>>& eigs);

Rat det(const Mat& m);

}  // namespace rt

#endif
