#ifndef RT_BZ_HPP
#define RT_BZ_HPP

#include <map>
#include <utility>
#include <vector>

#include "rt/spectrum.hpp"

namespace rt {

// Triangle point lattice in barycentric coordinates (alpha, beta, gamma),
// gamma = -alpha - beta, with 2*alpha and 2*beta integral but not both
// integral and 0 < beta < -alpha < r+1.  Points are stored as doubled
// integer pairs (2*alpha, 2*beta) to keep the lattice integral.
struct BZTriangle {
    int r = 0;
    std::vector<std::pair<int, int>> points;
    std::vector<long> l, m, n;  // boundary labels, 1-based l_1..l_r etc.
};

// Builds the point set and validates the labels (nonnegative, length r).
BZTriangle make_triangle(int r, std::vector<long> l, std::vector<long> m,
                         std::vector<long> n);

struct Filling {
    std::map<std::pair<int, int>, long> f;  // doubled point -> value
};

// Exact number of nonnegative integer fillings satisfying the hexagon
// conditions and the boundary conditions.  Branch-and-bound with interval
// constraint propagation over the equation system.
long count_fillings(const BZTriangle& t);

// Independent Littlewood-Richardson oracle: the number of LR skew tableaux
// of shape nu/lambda and content mu (classical tableau rule).
long lr_oracle(const std::vector<long>& lambda, const std::vector<long>& mu,
               const std::vector<long>& nu);

// Boundary labels from partitions padded to r+1 parts: consecutive
// differences.  Returns (l, m, n) from (lambda, mu, nu).
struct BoundaryLabels {
    std::vector<long> l, m, n;
};
BoundaryLabels labels_from_partitions(const std::vector<long>& lambda,
                                      const std::vector<long>& mu,
                                      const std::vector<long>& nu, int r);

// sl_{r+1} boundary labels of an integer spectrum: consecutive differences
// of the decreasingly sorted eigenvalue lists (B -> l, C -> m, A -> n).
// Throws NonIntegral when an eigenvalue is not an integer.
BoundaryLabels gl_to_sl_weights(const TripleSpectrum& s);

// Closed-form free variable of the hypergeometric strip,
// x = (sum_j (r+1-j) l_j - sum_j j m_j + r n_r) / (r+1).
Rat hg_strip_x(const std::vector<long>& l, const std::vector<long>& m,
               long n_r);

// Unique filling on the hypergeometric boundary (n_1 = ... = n_{r-1} = 0):
// fixes the free strip variable to the closed-form x and propagates.
// Throws NoFilling if x or any entry fails integrality or nonnegativity.
Filling hg_strip_solution(const std::vector<long>& l,
                          const std::vector<long>& m, long n_r);

}  // namespace rt

#endif
