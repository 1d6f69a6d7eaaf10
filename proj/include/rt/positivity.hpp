#ifndef RT_POSITIVITY_HPP
#define RT_POSITIVITY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rt/spectral.hpp"

namespace rt {

enum class Verdict { PositiveDefinite, NegativeDefinite, Indefinite, Degenerate };

std::string verdict_name(Verdict v);

struct SignVerdict {
    Verdict verdict;
    // For Indefinite: Gram indices carrying opposite signs.
    std::optional<std::pair<int, int>> witness;
    // Which inequality table matched ("column-1", "config-3", "regime-2", ...).
    std::string matched_case;
};

struct Signature {
    int pos = 0, neg = 0, zero = 0;
};

// Exact signature of a symmetric rational matrix by congruence
// (LDL^T-style symmetric pivoting with the rank-2 fallback when the whole
// remaining diagonal vanishes).
Signature signature_of(const Mat& g);

// Direct sign scan of the invariant form.
SignVerdict gram_signature(const InvariantForm& f);

// Inequality-table predicates; pure functions of the spectrum.  Throw
// OrderingViolation when the table's ordering hypotheses fail.
SignVerdict predicate_hg(const TripleSpectrum& s);
SignVerdict predicate_even(const TripleSpectrum& s);
SignVerdict predicate_odd(const TripleSpectrum& s);
SignVerdict predicate_extra(const TripleSpectrum& s);
SignVerdict predicate_e8(const TripleSpectrum& s);
SignVerdict predicate(const TripleSpectrum& s);  // dispatch on the family

// Predicate-vs-scan agreement sweep over random spectra satisfying the
// ordering hypotheses; deterministic per seed, fans out across threads
// (capped by the RT_MAX_THREADS environment variable).
struct SweepReport {
    int samples = 0;
    int mismatches = 0;
    int definite = 0;
    std::map<std::string, int> case_hits;
};
SweepReport sweep_agreement(const FamilyKind& kind, int samples,
                            std::uint64_t seed);

// Integer spectra on a definite face (lattice points of the cone face).
// `face` restricts to one matched_case; empty accepts any.
std::vector<TripleSpectrum> klyachko_face_sample(const FamilyKind& kind,
                                                 std::uint64_t seed, int count,
                                                 const std::string& face = "");

}  // namespace rt

#endif
