#ifndef RT_IDENTITIES_HPP
#define RT_IDENTITIES_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rt/rat.hpp"

namespace rt {

// The fourteen rational identities, numbered 1..14.  Identities 8-10 share
// one summand shape (powers 0, 1, 2); 11 and 12 likewise (powers 1, 2).
struct IdentityId {
    int id;
    // required list lengths for a size parameter n (x-list, y-list)
    int nx(int n) const;
    int ny(int n) const;
    // how many auxiliary index parameters the identity takes (0, 1 or 2)
    int index_count() const;
};

IdentityId identity(int id);

// Auxiliary 0-based indices for identities 1 (k = y-length handled via ny),
// 5, 6, 7, 11-14.  Unused fields are ignored.
struct IdentityParams {
    int i = 0;
    int j = 0;
};

// Exact evaluation of both sides.  Throws PoleAtPoint when any denominator
// vanishes at (x, y).
std::pair<Rat, Rat> eval_sides(const IdentityId& id, const std::vector<Rat>& x,
                               const std::vector<Rat>& y,
                               const IdentityParams& p = {});

struct IdentityReport {
    int id = 0;
    bool pass = false;
    int trials = 0;
    int first_failure = -1;  // trial index, -1 when none
    // per-variable degree bound of the cleared difference vs the number of
    // sampled evaluations: the randomized check covers the identity's degree
    std::string degree_note;
};

// Samples `trials` pole-free rational points deterministically from `seed`
// with sizes ranging over 2..6 and all admissible index parameters; PASS iff
// lhs = rhs exactly everywhere.  `perturb_rhs` adds 1 to the right side
// (negative control: must FAIL at the first point).
IdentityReport check_identity(int id, int trials, std::uint64_t seed,
                              bool perturb_rhs = false);

}  // namespace rt

#endif
