#ifndef RT_FAMILIES_HPP
#define RT_FAMILIES_HPP

#include "rt/matrix.hpp"
#include "rt/spectrum.hpp"

namespace rt {

// A = B + C with B block upper-triangular and C block lower-triangular in
// the family's composition; spectrum metadata travels with the matrices.
struct RigidTriple {
    TripleSpectrum spectrum;
    Mat B, C, A;
};

RigidTriple build_hypergeometric(const TripleSpectrum& s);
RigidTriple build_even(const TripleSpectrum& s);
RigidTriple build_odd(const TripleSpectrum& s);
RigidTriple build_extra(const TripleSpectrum& s);
RigidTriple build_e8(const TripleSpectrum& s);

// Dispatch on s.kind.tag.
RigidTriple build(const TripleSpectrum& s);

// Affine reparametrization A -> kA + theta, B -> kB + phi, C -> kC + (theta-phi);
// updates the spectrum metadata by the same maps.  Throws ZeroScale.
RigidTriple normalize(const RigidTriple& t, const Rat& k, const Rat& theta,
                      const Rat& phi);

// The parameters that make the even family traceless with a = (1, -1).
struct EvenNormalization {
    Rat k, theta, phi;
};
EvenNormalization even_normalization(const TripleSpectrum& s);

}  // namespace rt

#endif
