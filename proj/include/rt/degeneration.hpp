#ifndef RT_DEGENERATION_HPP
#define RT_DEGENERATION_HPP

#include <vector>

#include "rt/families.hpp"
#include "rt/matrix.hpp"

namespace rt {

// The restriction/quotient of a triple onto a smaller family member, paired
// with the direct constructor on the induced (renumbered) spectrum and the
// unique intertwiner T relating them: T * restricted = direct * T.
struct DegenerationResult {
    RigidTriple restricted;
    RigidTriple direct;
    Mat intertwiner;  // diagonal and invertible
    bool literal;     // true when T is scalar, i.e. entrywise equality
};

// Even triple with p32_i = 0: the coordinate complement of e_{2m+1-i} is
// invariant; restriction is an odd triple of size 2m-1 on the c-list with
// c_i removed.  Literal equality holds exactly for i = m.
DegenerationResult om_from_em_sub(const RigidTriple& em, int i);

// Even triple with p31_i = 0: the line spanned by e_{2m+1-i} is invariant;
// the quotient is an odd triple with the roles of a1 and a2 exchanged.
DegenerationResult om_from_em_factor(const RigidTriple& em, int i);

// Odd triple with p21_i = 0 (m+1 <= i <= 2m): the line spanned by
// e_{2m+2-i} is invariant; the quotient is an even triple of size 2m.
// Literal equality holds exactly for i = m+1.
DegenerationResult em_from_om(const RigidTriple& om, int i);

// Hypergeometric triple with b_i + c_{m+1-i} - a2 = 0: coordinate i spans
// off from the rest; restriction is the size-(m-1) triple on the lists with
// b_i and c_{m+1-i} removed.  Always literal.
DegenerationResult hgm_sub_from_hgm(const RigidTriple& hg, int i);

// Hypergeometric triples living on coordinate blocks of an even triple:
// A' = -B|, B' = -A|, C' = C| on V1+V2 (coordinates 1..m) or V1+V3
// (coordinates 1, m+1..2m).
enum class EmBlock { V1V2, V1V3 };

struct EmbeddedTriple {
    RigidTriple triple;  // block matrices in their A' = B' + C' roles
    RigidTriple direct;  // build_hypergeometric on the induced spectrum
    Mat intertwiner;     // unique up to scale, invertible
};
EmbeddedTriple hgm_inside_em(const RigidTriple& em, EmBlock block);

// Unit-lower-triangular change of basis to the z-basis, plus the open-orbit
// representative vectors a_k (0/1 combinations of z-columns).
struct ZBasis {
    Mat Z;
    std::vector<Vec> z_columns;
    std::vector<Vec> a_vectors;
};
ZBasis z_basis(const RigidTriple& t);  // Even or ExtraE8hat

// Determinant of the arrow matrix diag(alpha) + first row beta + first
// column gamma: prod alpha_i - sum_j beta_j gamma_j prod_{k>=2, k!=1+j} alpha_k.
Rat det_arrow_formula(const std::vector<Rat>& alpha, const std::vector<Rat>& beta,
                      const std::vector<Rat>& gamma);

}  // namespace rt

#endif
