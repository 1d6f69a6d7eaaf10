#ifndef RT_SPECTRUM_HPP
#define RT_SPECTRUM_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rt/matrix.hpp"
#include "rt/rat.hpp"

namespace rt {

enum class Family { Hypergeometric, Even, Odd, ExtraE8hat, E8 };

struct FamilyKind {
    Family tag;
    int m;  // series parameter; ignored for the two exceptional families

    int n() const;  // matrix size: m, 2m, 2m+1, 6, 6
    std::string name() const;  // "hg", "even", "odd", "extra", "e8" (+":m")
};

FamilyKind parse_family(const std::string& text);

// Eigenvalue data as distinct-value lists; multiplicities are implied by the
// family composition:
//   hg    : a = (a1, a2^{m-1});  b = b1..bm;        c = c1..cm
//   even  : a = (a1^m, a2^m);    b = (b1, b2^{m-1}, b3^m); c = c1..c2m
//   odd   : a = (a1^{m+1}, a2^m); b = (b1, b2^m, b3^m);    c = c1..c2m+1
//   extra : a = (a1^4, a2^2);    b = (b1^2, b2^2, b3^2);   c = c1..c6
//   e8    : a = (a1^3, a2^3);    b = (b1^2, b2^2, b3^2);   c = (c1..c4, c5^2)
struct TripleSpectrum {
    FamilyKind kind;
    std::vector<Rat> a, b, c;

    std::vector<std::pair<Rat, int>> a_eigs() const;
    std::vector<std::pair<Rat, int>> b_eigs() const;
    std::vector<std::pair<Rat, int>> c_eigs() const;
};

// Checks the trace condition and the distinctness pattern; throws
// TraceViolation / DegenerateSpectrum / DimensionMismatch.
TripleSpectrum validate_spectrum(const FamilyKind& kind, TripleSpectrum raw);

// True iff every linear form in the family's Gram formulas (numerators and
// denominators) is nonzero; in_S_prime checks denominators only.
bool in_S_double_prime(const TripleSpectrum& s);
bool in_S_prime(const TripleSpectrum& s);

// Deterministic rejection sampler; the last free eigenvalue is solved from
// the trace condition and the result always lies in S''.
TripleSpectrum sample_generic_spectrum(const FamilyKind& kind, std::uint64_t seed,
                                       int bound = 30);

// Spectrum with exactly one vanishing linear form — the named one — solved
// for exactly rather than sampled near zero.  EvenP32/EvenP31 take an even
// kind, OddP21 an odd kind (m+1 <= i <= 2m), HgSub a hypergeometric kind
// (vanishing form b_i + c_{m+1-i} - a2).
enum class Hyperplane { EvenP32, EvenP31, OddP21, HgSub };
TripleSpectrum sample_hyperplane_spectrum(const FamilyKind& kind, Hyperplane h,
                                          int i, std::uint64_t seed,
                                          int bound = 30);

// ------------------------------------------------------------------ forms
// The linear forms the entry formulas are built from (1-based indices).
Rat p_form(const TripleSpectrum& s, int i, int j, int k);      // c_i + b_j - a_k
Rat q_form(const TripleSpectrum& s, int i, int j);             // c_i+c_j+b2+b3-a1-a2
Rat p_extra_form(const TripleSpectrum& s, int i, int j);       // b_i + c_j - a_1
Rat q_extra_form(const TripleSpectrum& s, int i, int j, int k);  // c_i+c_j+c_k - (sum c)/2

}  // namespace rt

#endif
