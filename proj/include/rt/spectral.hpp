#ifndef RT_SPECTRAL_HPP
#define RT_SPECTRAL_HPP

#include <vector>

#include "rt/families.hpp"
#include "rt/matrix.hpp"

namespace rt {

// Closed-form eigenvector bases.  Column i of `vectors` is the family's
// v_{i+1}; for the hypergeometric family these are eigenvectors of B, for
// every other family eigenvectors of C (E8's repeated eigenvalue contributes
// two kernel columns).  For the even family `vectors_B` additionally holds
// the closed-form eigenvectors w_i of B.
struct EigenSystem {
    Mat vectors;
    std::vector<Rat> eigenvalue_of_column;
    Mat vectors_B;  // even family only; 0x0 otherwise
    std::vector<Rat> eigenvalue_of_column_B;
};

EigenSystem eigenvectors(const RigidTriple& t);

// Individual closed-form vectors (1-based i), exposed for the fixture tests.
Vec hg_eigvec_B(const TripleSpectrum& s, int i);
Vec even_eigvec_C(const TripleSpectrum& s, int i);
Vec even_eigvec_B(const TripleSpectrum& s, int i);
Vec odd_eigvec_C(const TripleSpectrum& s, int i);
Vec extra_eigvec_C(const TripleSpectrum& s, int i);

// Closed-form Gram values <v_i, v_i> (1-based i).
Rat hg_gram(const TripleSpectrum& s, int i);
Rat even_gram(const TripleSpectrum& s, int i);
Rat odd_gram(const TripleSpectrum& s, int i);
Rat extra_gram(const TripleSpectrum& s, int i);

struct InvariantForm {
    std::vector<Rat> gram;       // diagonal Gram values in the v-basis
    Mat G;                       // the form in the standard basis
    std::vector<Rat> hg_aux_s;   // s_i (hypergeometric only)
    std::vector<Rat> hg_aux_x;   // x_i (hypergeometric only)
    bool degenerate = false;     // some gram value vanished (outside S'')
};

// Assembles G = V^{-T} diag(gram) V^{-1} from the closed forms; for E8 the
// form is computed as the one-dimensional solution of the self-adjointness
// system and scaled so its first nonzero entry is 1.
InvariantForm invariant_form(const RigidTriple& t, const EigenSystem& es);

bool check_self_adjoint(const Mat& m, const Mat& g);

// Basis of {G symmetric : GB = B^T G, GC = C^T G}.
std::vector<Mat> invariant_form_basis(const Mat& b, const Mat& c);

int check_form_uniqueness(const RigidTriple& t);

// Burnside criterion: dimension of the unital algebra generated by B and C.
struct IrreducibilityReport {
    bool irreducible;
    int span_dim;  // < n*n certifies a proper invariant subspace exists
};
IrreducibilityReport check_irreducible_report(const RigidTriple& t);
bool check_irreducible(const RigidTriple& t);

// Rank-one structure of the normalized (a2 = 0) hypergeometric A.
struct HgRankOneCertificate {
    Vec i_vec;                 // (b_1+c_m, ..., b_m+c_1)
    std::vector<Rat> s, x;     // auxiliary scalars, <v_i,v_i> = s_i/x_i
};
HgRankOneCertificate hg_rank_one_certificate(const RigidTriple& t);

}  // namespace rt

#endif
