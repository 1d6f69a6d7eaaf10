#ifndef RT_FUCHSIAN_HPP
#define RT_FUCHSIAN_HPP

#include <array>
#include <optional>

#include "rt/json_io.hpp"

namespace rt {

// Point on the projective line; infinity is a tagged state, not a sentinel.
struct ProjPoint {
    bool infinite = false;
    Rat value;  // ignored when infinite

    static ProjPoint at(Rat v) { return {false, std::move(v)}; }
    static ProjPoint infinity() { return {true, Rat(0)}; }
};
bool operator==(const ProjPoint& p, const ProjPoint& q);

// df/dz = sum_i R_i / (z - z_i) with residues (-A, B, C) at (z1, z2, z3);
// the local exponents at each singularity are the residue's eigenvalues.
struct FuchsianSystem {
    std::array<ProjPoint, 3> singularities;
    std::array<Mat, 3> residues;
    std::array<std::vector<std::pair<Rat, int>>, 3> exponents;
    std::optional<Mat> form;  // invariant form G when available
};

// Throws CoincidentSingularities unless z1, z2, z3 are pairwise distinct.
// Verifies the residue sum vanishes.
FuchsianSystem assemble(const RigidTriple& t, const ProjPoint& z1,
                        const ProjPoint& z2, const ProjPoint& z3);

// fuchsian.json: { "singularities": [...], "residues": [[[...]]],
// "exponents": [...], "form": optional [[...]] }
Json fuchsian_to_json(const FuchsianSystem& sys);
FuchsianSystem fuchsian_from_json(const Json& j);

}  // namespace rt

#endif
