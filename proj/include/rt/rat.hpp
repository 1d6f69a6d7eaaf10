#ifndef RT_RAT_HPP
#define RT_RAT_HPP

#include <gmpxx.h>

#include <string>

namespace rt {

// Exact rational scalar.  mpq_class keeps the value canonical (reduced,
// positive denominator) as long as values are built through arithmetic or
// through the helpers below, so equality is plain value equality.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Parse "num" or "num/den".  Throws std::invalid_argument on garbage.
Rat rat_from_string(const std::string& s);

// Serialize as "num/den", omitting "/den" when the denominator is 1.
std::string rat_to_string(const Rat& r);

inline int sign(const Rat& r) { return sgn(r); }

}  // namespace rt

#endif
