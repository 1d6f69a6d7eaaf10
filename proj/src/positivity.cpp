#include "rt/positivity.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <random>
#include <set>
#include <thread>

namespace rt {
namespace {

int sgn(const Rat& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

// 0 when not all values share one nonzero sign; otherwise that sign.
int all_same_sign(const std::vector<Rat>& vals) {
    int s = sgn(vals.at(0));
    if (s == 0) return 0;
    for (const Rat& v : vals)
        if (sgn(v) != s) return 0;
    return s;
}

SignVerdict definite_by(int eps, std::string matched) {
    return {eps > 0 ? Verdict::PositiveDefinite : Verdict::NegativeDefinite,
            std::nullopt, std::move(matched)};
}

SignVerdict non_definite(const TripleSpectrum& s) {
    return {in_S_double_prime(s) ? Verdict::Indefinite : Verdict::Degenerate,
            std::nullopt, ""};
}

// ------------------------------------------------------------------- E8
// The definiteness boundary of the E8 family consists of 24 linear forms;
// under the ordering hypotheses each admissible position of c5 carries
// exactly one sign-definite chamber.
const std::array<std::array<int, 5>, 5> kE8COrders = {{
    {1, 2, 3, 4, 5},
    {1, 2, 3, 5, 4},
    {1, 2, 5, 3, 4},
    {1, 5, 2, 3, 4},
    {5, 1, 2, 3, 4},
}};

const std::array<std::pair<int, int>, 6> kE8P = {{
    {1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}, {2, 3}}};  // (a_t, b_i)

const std::array<std::array<int, 4>, 6> kE8R = {{
    {1, 1, -1, -1}, {1, -1, 1, -1}, {1, -1, -1, 1},
    {-1, 1, 1, -1}, {-1, 1, -1, 1}, {-1, -1, 1, 1}}};

// Sign patterns per regime, over: 6 P forms -a_t+b_i+c5; 12 Q forms
// -a1-a2+b_i+b_j+c_k+c5 ((i,j) in {12,13,23}, k=1..4); 6 R forms
// a1-a2 +/- c1..c4 with two minus signs.
const std::array<const char*, 5> kE8Signs = {
    "---+--" "+++-" "+---" "----" "+++++-",
    "---++-" "+++-" "++--" "----" "++++--",
    "+--++-" "+++-" "++--" "+---" "+++++-",
    "+--+++" "++++" "++--" "+---" "++++--",
    "++-+++" "++++" "+++-" "+---" "+++++-",
};

std::vector<Rat> e8_boundary_forms(const TripleSpectrum& s) {
    const Rat &a1 = s.a[0], &a2 = s.a[1];
    std::vector<Rat> out;
    for (const auto& [t, i] : kE8P)
        out.push_back(-(t == 1 ? a1 : a2) + s.b[i - 1] + s.c[4]);
    for (int pair = 0; pair < 3; ++pair) {
        int i = pair == 2 ? 2 : 1;
        int j = pair == 0 ? 2 : 3;
        for (int k = 1; k <= 4; ++k)
            out.push_back(-a1 - a2 + s.b[i - 1] + s.b[j - 1] + s.c[k - 1] +
                          s.c[4]);
    }
    for (const auto& sgns : kE8R) {
        Rat f = a1 - a2;
        for (int k = 0; k < 4; ++k) f += sgns[k] * s.c[k];
        out.push_back(f);
    }
    return out;
}

// ---------------------------------------------------------------- sweeps

Rat rand_rat(std::mt19937_64& rng, int lo, int hi, int maxden) {
    std::uniform_int_distribution<int> num(lo, hi);
    std::uniform_int_distribution<int> den(1, maxden);
    return rat(num(rng), den(rng));
}

bool strictly_desc(const std::vector<Rat>& v) {
    for (size_t i = 0; i + 1 < v.size(); ++i)
        if (!(v[i] > v[i + 1])) return false;
    return true;
}

std::vector<Rat> sorted_desc(std::vector<Rat> v) {
    std::sort(v.begin(), v.end(), [](const Rat& x, const Rat& y) { return x > y; });
    return v;
}

TripleSpectrum sample_hg_for_sweep(std::mt19937_64& rng, int m, bool targeted) {
    for (;;) {
        TripleSpectrum s;
        s.kind = {Family::Hypergeometric, m};
        for (int k = 0; k < m; ++k) s.b.push_back(rand_rat(rng, -40, 40, 4));
        for (int k = 0; k < m; ++k) s.c.push_back(rand_rat(rng, -40, 40, 4));
        s.b = sorted_desc(s.b);
        s.c = sorted_desc(s.c);
        if (!strictly_desc(s.b) || !strictly_desc(s.c)) continue;
        Rat a2;
        if (targeted) {
            // aim at column 2: b_i+c_{m-i} > a2 > b_i+c_{m+1-i}, a2 > b_m+c_1
            Rat lo = s.b[m - 1] + s.c[0];
            for (int i = 1; i < m; ++i)
                lo = std::max(lo, Rat(s.b[i - 1] + s.c[m - i]));
            Rat hi = s.b[0] + s.c[m - 2];
            for (int i = 1; i < m; ++i)
                hi = std::min(hi, Rat(s.b[i - 1] + s.c[m - i - 1]));
            if (lo >= hi) continue;
            a2 = (lo + hi) / 2;
        } else {
            a2 = rand_rat(rng, -80, 80, 4);
        }
        Rat total;
        for (const Rat& x : s.b) total += x;
        for (const Rat& x : s.c) total += x;
        s.a = {total - (m - 1) * a2, a2};
        if (s.a[0] == s.a[1]) continue;
        if (!in_S_double_prime(s)) continue;
        return s;
    }
}

TripleSpectrum sample_even_for_sweep(std::mt19937_64& rng, int m) {
    for (;;) {
        TripleSpectrum s;
        s.kind = {Family::Even, m};
        for (int k = 0; k < 3; ++k) s.b.push_back(rand_rat(rng, -12, 12, 2));
        for (int k = 0; k < 2 * m; ++k) s.c.push_back(rand_rat(rng, -24, 24, 2));
        s.c = sorted_desc(s.c);
        if (!strictly_desc(s.c)) continue;
        if (s.b[0] == s.b[1] || s.b[0] == s.b[2] || s.b[1] == s.b[2]) continue;
        Rat a2 = rand_rat(rng, -12, 12, 2);
        Rat total = s.b[0] + (m - 1) * s.b[1] + m * s.b[2];
        for (const Rat& x : s.c) total += x;
        Rat a1 = total / m - a2;
        if (!(a1 > a2)) continue;
        s.a = {a1, a2};
        if (!in_S_double_prime(s)) continue;
        return s;
    }
}

TripleSpectrum sample_odd_for_sweep(std::mt19937_64& rng, int m) {
    for (;;) {
        TripleSpectrum s;
        s.kind = {Family::Odd, m};
        for (int k = 0; k < 3; ++k) s.b.push_back(rand_rat(rng, -12, 12, 2));
        if (!(s.b[1] > s.b[2])) continue;
        for (int k = 0; k < 2 * m + 1; ++k)
            s.c.push_back(rand_rat(rng, -24, 24, 2));
        s.c = sorted_desc(s.c);
        if (!strictly_desc(s.c)) continue;
        if (s.b[0] == s.b[1] || s.b[0] == s.b[2]) continue;
        Rat a2 = rand_rat(rng, -12, 12, 2);
        Rat total = s.b[0] + m * s.b[1] + m * s.b[2];
        for (const Rat& x : s.c) total += x;
        Rat a1 = (total - m * a2) / (m + 1);
        if (!(a1 > a2)) continue;
        s.a = {a1, a2};
        if (!in_S_double_prime(s)) continue;
        return s;
    }
}

TripleSpectrum sample_extra_for_sweep(std::mt19937_64& rng) {
    for (;;) {
        TripleSpectrum s;
        s.kind = {Family::ExtraE8hat, 0};
        for (int k = 0; k < 3; ++k) s.b.push_back(rand_rat(rng, -12, 12, 2));
        for (int k = 0; k < 6; ++k) s.c.push_back(rand_rat(rng, -18, 18, 2));
        s.b = sorted_desc(s.b);
        s.c = sorted_desc(s.c);
        if (!strictly_desc(s.b) || !strictly_desc(s.c)) continue;
        Rat a1 = rand_rat(rng, -12, 12, 2);
        Rat total = 2 * (s.b[0] + s.b[1] + s.b[2]);
        for (const Rat& x : s.c) total += x;
        Rat a2 = (total - 4 * a1) / 2;
        if (a1 == a2) continue;
        s.a = {a1, a2};
        if (!in_S_double_prime(s)) continue;
        return s;
    }
}

TripleSpectrum sample_e8_for_sweep(std::mt19937_64& rng) {
    for (;;) {
        TripleSpectrum s;
        s.kind = {Family::E8, 0};
        for (int k = 0; k < 3; ++k) s.b.push_back(rand_rat(rng, -8, 8, 2));
        s.b = sorted_desc(s.b);
        if (!strictly_desc(s.b)) continue;
        std::vector<Rat> c4;
        for (int k = 0; k < 4; ++k) c4.push_back(rand_rat(rng, -12, 12, 2));
        c4 = sorted_desc(c4);
        if (!strictly_desc(c4)) continue;
        s.c = c4;
        s.c.push_back(rand_rat(rng, -12, 12, 2));
        std::set<Rat> cs(s.c.begin(), s.c.end());
        if (cs.size() != 5) continue;
        Rat a1 = rand_rat(rng, -8, 8, 2);
        Rat total = 2 * (s.b[0] + s.b[1] + s.b[2]) + s.c[4];
        for (const Rat& x : s.c) total += x;
        Rat a2 = (total - 3 * a1) / 3;
        if (!(a1 > a2)) continue;
        s.a = {a1, a2};
        return s;
    }
}

int thread_budget() {
    if (const char* env = std::getenv("RT_MAX_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? int(hw) : 1;
}

}  // namespace

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::PositiveDefinite: return "positive-definite";
        case Verdict::NegativeDefinite: return "negative-definite";
        case Verdict::Indefinite: return "indefinite";
        case Verdict::Degenerate: return "degenerate";
    }
    return "?";
}

Signature signature_of(const Mat& g) {
    Mat w = g;
    const int n = w.rows();
    Signature sig;
    std::vector<int> idxs;
    for (int i = 0; i < n; ++i) idxs.push_back(i);
    while (!idxs.empty()) {
        int piv = -1;
        for (int i : idxs)
            if (w(i, i) != 0) {
                piv = i;
                break;
            }
        if (piv >= 0) {
            Rat d = w(piv, piv);
            (d > 0 ? sig.pos : sig.neg) += 1;
            idxs.erase(std::find(idxs.begin(), idxs.end(), piv));
            for (int i : idxs)
                for (int j : idxs) w(i, j) -= w(i, piv) * w(piv, j) / d;
            for (int i : idxs) w(i, piv) = w(piv, i) = 0;
            continue;
        }
        // every remaining diagonal entry vanishes: find an off-diagonal pivot
        int pi = -1, pj = -1;
        for (size_t a = 0; a < idxs.size() && pi < 0; ++a)
            for (size_t b = a + 1; b < idxs.size(); ++b)
                if (w(idxs[a], idxs[b]) != 0) {
                    pi = idxs[a];
                    pj = idxs[b];
                    break;
                }
        if (pi < 0) break;  // the rest is identically zero
        // e_pi -> e_pi + e_pj exposes the nonzero 2x2 block on the diagonal
        for (int k = 0; k < n; ++k) w(pi, k) += w(pj, k);
        for (int k = 0; k < n; ++k) w(k, pi) += w(k, pj);
    }
    sig.zero = n - sig.pos - sig.neg;
    return sig;
}

SignVerdict gram_signature(const InvariantForm& f) {
    const int n = f.G.rows();
    Signature sig = signature_of(f.G);
    SignVerdict v;
    if (sig.zero > 0)
        v.verdict = Verdict::Degenerate;
    else if (sig.pos == n)
        v.verdict = Verdict::PositiveDefinite;
    else if (sig.neg == n)
        v.verdict = Verdict::NegativeDefinite;
    else {
        v.verdict = Verdict::Indefinite;
        int ip = -1, in = -1;
        for (int i = 0; i < int(f.gram.size()); ++i) {
            if (f.gram[i] > 0 && ip < 0) ip = i;
            if (f.gram[i] < 0 && in < 0) in = i;
        }
        if (ip >= 0 && in >= 0) v.witness = {ip, in};
    }
    return v;
}

SignVerdict predicate_hg(const TripleSpectrum& s) {
    const int m = s.kind.m;
    const Rat &a1 = s.a[0], &a2 = s.a[1];
    const auto& b = s.b;
    const auto& c = s.c;
    if (!strictly_desc(b) || !strictly_desc(c))
        throw OrderingViolation("predicate_hg needs b and c strictly decreasing");
    bool col1 = b[0] + c[m - 1] > a2;
    for (int i = 1; i < m && col1; ++i)
        col1 = b[m - i] + c[i - 1] > a2 && a2 > b[m - i] + c[i];
    bool col2 = a2 > b[m - 1] + c[0];
    for (int i = 1; i < m && col2; ++i)
        col2 = b[i - 1] + c[m - i - 1] > a2 && a2 > b[i - 1] + c[m - i];
    if (col1 || col2)
        return definite_by(sgn(a1 - a2), col1 ? "column-1" : "column-2");
    return non_definite(s);
}

SignVerdict predicate_even(const TripleSpectrum& s) {
    const int m = s.kind.m;
    const auto& b = s.b;
    if (!(s.a[0] > s.a[1]) || !strictly_desc(s.c))
        throw OrderingViolation("predicate_even needs a1 > a2, c decreasing");
    auto p31 = [&](int i) -> Rat { return p_form(s, i, 3, 1); };
    auto p32 = [&](int i) -> Rat { return p_form(s, i, 3, 2); };
    auto q = [&](int i, int j) -> Rat { return q_form(s, i, j); };
    auto chain = [&](auto f) {
        for (int i = 1; i < m; ++i)
            if (!f(i)) return false;
        return true;
    };
    bool conf[6];
    conf[0] = b[0] > b[2] && b[2] > b[1] && p31(m - 1) > 0 && 0 > p31(m) &&
              p32(2 * m - 1) > 0 && 0 > p32(2 * m) && chain([&](int i) {
                  return q(i, 2 * m - 1 - i) > 0 && 0 > q(i, 2 * m - i);
              });
    conf[1] = b[0] > b[1] && b[1] > b[2] && 0 > p31(1) && p32(m) > 0 &&
              0 > p32(m + 1) && 0 > q(m, m + 1) && chain([&](int i) {
                  return q(i, 2 * m - i) > 0 && 0 > q(i, 2 * m + 1 - i);
              });
    conf[2] = b[1] > b[0] && b[0] > b[2] && 0 > p31(1) && p32(m) > 0 &&
              0 > p32(m + 1) && q(m, m + 1) > 0 && chain([&](int i) {
                  return q(i, 2 * m + 1 - i) > 0 && 0 > q(i + 1, 2 * m + 1 - i);
              });
    conf[3] = b[1] > b[2] && b[2] > b[0] && p31(1) > 0 && 0 > p31(2) &&
              p32(m + 1) > 0 && 0 > p32(m + 2) && chain([&](int i) {
                  return q(i + 1, 2 * m + 1 - i) > 0 &&
                         0 > q(i + 2, 2 * m + 1 - i);
              });
    conf[4] = b[2] > b[1] && b[1] > b[0] && p31(m) > 0 && 0 > p31(m + 1) &&
              p32(2 * m) > 0 && q(m, m + 1) > 0 && chain([&](int i) {
                  return q(i, 2 * m + 1 - i) > 0 && 0 > q(i + 1, 2 * m + 1 - i);
              });
    conf[5] = b[2] > b[0] && b[0] > b[1] && p31(m) > 0 && 0 > p31(m + 1) &&
              p32(2 * m) > 0 && 0 > q(m, m + 1) && chain([&](int i) {
                  return q(i, 2 * m - i) > 0 && 0 > q(i, 2 * m + 1 - i);
              });
    for (int k = 0; k < 6; ++k)
        if (conf[k])
            return definite_by(sgn((b[0] - b[1]) * (b[0] - b[2])),
                               "config-" + std::to_string(k + 1));
    return non_definite(s);
}

SignVerdict predicate_odd(const TripleSpectrum& s) {
    const int m = s.kind.m;
    const auto& b = s.b;
    if (!(b[1] > b[2]) || !(s.a[0] > s.a[1]) || !strictly_desc(s.c))
        throw OrderingViolation(
            "predicate_odd needs b2 > b3, a1 > a2, c decreasing");
    auto p31 = [&](int i) -> Rat { return p_form(s, i, 3, 1); };
    auto p21 = [&](int i) -> Rat { return p_form(s, i, 2, 1); };
    auto q = [&](int i, int j) -> Rat { return q_form(s, i, j); };
    auto chain = [&](int hi, auto f) {
        for (int i = 1; i <= hi; ++i)
            if (!f(i)) return false;
        return true;
    };
    bool conf[3];
    conf[0] = b[0] > b[1] && 0 > p31(1) && p21(m) > 0 && 0 > p21(m + 1) &&
              chain(m, [&](int i) {
                  return q(i, 2 * m + 1 - i) > 0 && 0 > q(i, 2 * m + 2 - i);
              });
    conf[1] = b[1] > b[0] && b[0] > b[2] && 0 > p31(1) && p21(m + 1) > 0 &&
              0 > p21(m + 2) && chain(m, [&](int i) {
                  return q(i, 2 * m + 2 - i) > 0 && 0 > q(i + 1, 2 * m + 2 - i);
              });
    conf[2] = b[2] > b[0] && p31(1) > 0 && 0 > p31(2) && p21(m + 1) > 0 &&
              0 > p21(m + 2) && q(m + 1, m + 2) > 0 && chain(m - 1, [&](int i) {
                  return q(i + 1, 2 * m + 2 - i) > 0 &&
                         0 > q(i + 2, 2 * m + 2 - i);
              });
    for (int k = 0; k < 3; ++k)
        if (conf[k])
            return definite_by(sgn((b[0] - b[1]) * (b[0] - b[2])),
                               "config-" + std::to_string(k + 1));
    return non_definite(s);
}

SignVerdict predicate_extra(const TripleSpectrum& s) {
    const Rat &a1 = s.a[0], &a2 = s.a[1];
    const auto& b = s.b;
    const auto& c = s.c;
    if (!strictly_desc(b) || !strictly_desc(c))
        throw OrderingViolation(
            "predicate_extra needs b and c strictly decreasing");
    bool csum = c[0] + c[3] + c[4] > c[1] + c[2] + c[5] &&
                c[0] + c[2] + c[5] > c[1] + c[3] + c[4] &&
                c[1] + c[2] + c[4] > c[0] + c[3] + c[5];
    bool col1 = csum && b[0] + c[3] > a1 && a1 > b[0] + c[4] &&
                b[1] + c[1] > a1 && a1 > b[1] + c[2] && a1 > b[2] + c[0];
    bool col2 = csum && b[2] + c[1] > a1 && a1 > b[2] + c[2] &&
                b[1] + c[3] > a1 && a1 > b[1] + c[4] && b[0] + c[5] > a1;
    if (col1 || col2)
        return definite_by(sgn(a1 - a2), col1 ? "column-1" : "column-2");
    return non_definite(s);
}

SignVerdict predicate_e8(const TripleSpectrum& s) {
    const auto& c = s.c;
    if (!(s.a[0] > s.a[1]) || !strictly_desc(s.b) ||
        !(c[0] > c[1] && c[1] > c[2] && c[2] > c[3]))
        throw OrderingViolation(
            "predicate_e8 needs a1 > a2, b decreasing, c1 > c2 > c3 > c4");
    int regime = -1;
    for (int k = 0; k < 5 && regime < 0; ++k) {
        bool ok = true;
        for (int i = 0; i < 4; ++i)
            if (!(c[kE8COrders[k][i] - 1] > c[kE8COrders[k][i + 1] - 1]))
                ok = false;
        if (ok) regime = k;
    }
    auto forms = e8_boundary_forms(s);
    if (regime >= 0) {
        const char* pat = kE8Signs[regime];
        bool matched = true;
        for (int t = 0; t < 24 && matched; ++t) {
            if (pat[t] == '+' && !(forms[t] > 0)) matched = false;
            if (pat[t] == '-' && !(forms[t] < 0)) matched = false;
        }
        if (matched)
            // With the form scaled so its first nonzero entry is 1, every
            // definite chamber is positive definite.
            return {Verdict::PositiveDefinite, std::nullopt,
                    "regime-" + std::to_string(regime + 1)};
    }
    for (const Rat& f : forms)
        if (f == 0) return {Verdict::Degenerate, std::nullopt, ""};
    return {Verdict::Indefinite, std::nullopt, ""};
}

SignVerdict predicate(const TripleSpectrum& s) {
    switch (s.kind.tag) {
        case Family::Hypergeometric: return predicate_hg(s);
        case Family::Even: return predicate_even(s);
        case Family::Odd: return predicate_odd(s);
        case Family::ExtraE8hat: return predicate_extra(s);
        case Family::E8: return predicate_e8(s);
    }
    throw SchemaError("unknown family");
}

SweepReport sweep_agreement(const FamilyKind& kind, int samples,
                            std::uint64_t seed) {
    const int threads = std::max(1, std::min(thread_budget(), samples));
    std::vector<SweepReport> parts(threads);
    auto run_chunk = [&](int tid) {
        SweepReport& rep = parts[tid];
        for (int i = tid; i < samples; i += threads) {
            std::mt19937_64 rng(seed * 1000003 + std::uint64_t(i));
            SignVerdict scan, pred;
            if (kind.tag == Family::E8) {
                for (;;) {
                    TripleSpectrum s = sample_e8_for_sweep(rng);
                    RigidTriple t = build_e8(s);
                    try {
                        InvariantForm f = invariant_form(t, eigenvectors(t));
                        scan = gram_signature(f);
                    } catch (const Error&) {
                        continue;  // form space not 1-dim: outside the sweep
                    }
                    pred = predicate_e8(s);
                    break;
                }
            } else {
                TripleSpectrum s;
                std::vector<Rat> gram;
                switch (kind.tag) {
                    case Family::Hypergeometric:
                        s = sample_hg_for_sweep(rng, kind.m, i % 3 == 0);
                        for (int k = 1; k <= kind.n(); ++k)
                            gram.push_back(hg_gram(s, k));
                        pred = predicate_hg(s);
                        break;
                    case Family::Even:
                        s = sample_even_for_sweep(rng, kind.m);
                        for (int k = 1; k <= kind.n(); ++k)
                            gram.push_back(even_gram(s, k));
                        pred = predicate_even(s);
                        break;
                    case Family::Odd:
                        s = sample_odd_for_sweep(rng, kind.m);
                        for (int k = 1; k <= kind.n(); ++k)
                            gram.push_back(odd_gram(s, k));
                        pred = predicate_odd(s);
                        break;
                    default:
                        s = sample_extra_for_sweep(rng);
                        for (int k = 1; k <= 6; ++k)
                            gram.push_back(extra_gram(s, k));
                        pred = predicate_extra(s);
                        break;
                }
                int ds = all_same_sign(gram);
                scan.verdict = ds > 0   ? Verdict::PositiveDefinite
                               : ds < 0 ? Verdict::NegativeDefinite
                                        : Verdict::Indefinite;
            }
            ++rep.samples;
            if (scan.verdict != pred.verdict) ++rep.mismatches;
            if (pred.verdict == Verdict::PositiveDefinite ||
                pred.verdict == Verdict::NegativeDefinite) {
                ++rep.definite;
                ++rep.case_hits[pred.matched_case];
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(run_chunk, t);
    for (auto& th : pool) th.join();
    SweepReport total;
    for (const auto& p : parts) {
        total.samples += p.samples;
        total.mismatches += p.mismatches;
        total.definite += p.definite;
        for (const auto& [k, v] : p.case_hits) total.case_hits[k] += v;
    }
    return total;
}

std::vector<TripleSpectrum> klyachko_face_sample(const FamilyKind& kind,
                                                 std::uint64_t seed, int count,
                                                 const std::string& face) {
    std::mt19937_64 rng(seed);
    std::vector<TripleSpectrum> out;
    std::set<std::vector<Rat>> seen;
    auto rint = [&](int lo, int hi) {
        std::uniform_int_distribution<int> d(lo, hi);
        return Rat(d(rng));
    };
    const long budget = 40'000'000;
    for (long attempt = 0; attempt < budget && int(out.size()) < count;
         ++attempt) {
        TripleSpectrum s;
        s.kind = kind;
        s.b.clear();
        s.c.clear();
        switch (kind.tag) {
            case Family::Hypergeometric: {
                const int m = kind.m;
                for (int k = 0; k < m; ++k) s.b.push_back(rint(-40, 40));
                for (int k = 0; k < m; ++k) s.c.push_back(rint(-40, 40));
                s.b = sorted_desc(s.b);
                s.c = sorted_desc(s.c);
                if (!strictly_desc(s.b) || !strictly_desc(s.c)) continue;
                // Place an integer a2 strictly inside the column interval.
                bool want1 = face == "column-1" ||
                             (face.empty() && attempt % 2 == 0);
                Rat lo, hi;
                if (want1) {
                    lo = s.b[m - 1] + s.c[m - 1];  // any lower bound below hi
                    hi = s.b[0] + s.c[m - 1];
                    for (int i = 1; i < m; ++i) {
                        lo = std::max(lo, Rat(s.b[m - i] + s.c[i]));
                        hi = std::min(hi, Rat(s.b[m - i] + s.c[i - 1]));
                    }
                } else {
                    lo = s.b[m - 1] + s.c[0];
                    hi = s.b[0] + s.c[0];
                    for (int i = 1; i < m; ++i) {
                        lo = std::max(lo, Rat(s.b[i - 1] + s.c[m - i]));
                        hi = std::min(hi, Rat(s.b[i - 1] + s.c[m - i - 1]));
                    }
                }
                if (!(hi - lo > 1)) continue;
                long ilo = long(mpz_get_si(Rat(lo).get_num_mpz_t())) + 1;
                long span = long(mpq_get_d(Rat(hi - lo).get_mpq_t()));
                std::uniform_int_distribution<long> pick(0, std::max(0L, span - 1));
                s.a = {Rat(0), Rat(long(ilo + pick(rng)))};
                if (!(s.a[1] > lo && s.a[1] < hi)) continue;
                break;
            }
            case Family::Even: {
                const int m = kind.m;
                for (int k = 0; k < 3; ++k) s.b.push_back(rint(-12, 12));
                for (int k = 0; k < 2 * m; ++k) s.c.push_back(rint(-24, 24));
                s.c = sorted_desc(s.c);
                if (!strictly_desc(s.c)) continue;
                s.a = {Rat(0), rint(-12, 12)};
                break;
            }
            case Family::Odd: {
                const int m = kind.m;
                for (int k = 0; k < 3; ++k) s.b.push_back(rint(-12, 12));
                for (int k = 0; k < 2 * m + 1; ++k)
                    s.c.push_back(rint(-24, 24));
                s.c = sorted_desc(s.c);
                if (!strictly_desc(s.c)) continue;
                s.a = {Rat(0), rint(-12, 12)};
                break;
            }
            case Family::ExtraE8hat: {
                for (int k = 0; k < 3; ++k) s.b.push_back(rint(-12, 12));
                for (int k = 0; k < 6; ++k) s.c.push_back(rint(-18, 18));
                s.b = sorted_desc(s.b);
                s.c = sorted_desc(s.c);
                if (!strictly_desc(s.b) || !strictly_desc(s.c)) continue;
                s.a = {rint(-12, 12), Rat(0)};
                break;
            }
            case Family::E8: {
                int regime = 0;
                if (face.rfind("regime-", 0) == 0)
                    regime = std::stoi(face.substr(7)) - 1;
                else
                    regime = int(attempt % 5);
                std::vector<Rat> vals;
                for (int k = 0; k < 5; ++k) vals.push_back(rint(-15, 15));
                vals = sorted_desc(vals);
                if (!strictly_desc(vals)) continue;
                s.c.assign(5, Rat(0));
                for (int pos = 0; pos < 5; ++pos)
                    s.c[kE8COrders[regime][pos] - 1] = vals[pos];
                for (int k = 0; k < 3; ++k) s.b.push_back(rint(-10, 10));
                s.b = sorted_desc(s.b);
                if (!strictly_desc(s.b)) continue;
                s.a = {rint(-10, 20), Rat(0)};
                break;
            }
        }
        // Solve the trace condition for the open slot; keep integral results.
        switch (kind.tag) {
            case Family::Hypergeometric: {
                Rat total;
                for (const Rat& x : s.b) total += x;
                for (const Rat& x : s.c) total += x;
                s.a[0] = total - (kind.m - 1) * s.a[1];
                break;
            }
            case Family::Even: {
                const int m = kind.m;
                Rat total = s.b[0] + (m - 1) * s.b[1] + m * s.b[2];
                for (const Rat& x : s.c) total += x;
                Rat a1 = total / m - s.a[1];
                if (a1.get_den() != 1) continue;
                s.a[0] = a1;
                break;
            }
            case Family::Odd: {
                const int m = kind.m;
                Rat total = s.b[0] + m * s.b[1] + m * s.b[2];
                for (const Rat& x : s.c) total += x;
                Rat a1 = (total - m * s.a[1]) / (m + 1);
                if (a1.get_den() != 1) continue;
                s.a[0] = a1;
                break;
            }
            case Family::ExtraE8hat: {
                Rat total = 2 * (s.b[0] + s.b[1] + s.b[2]);
                for (const Rat& x : s.c) total += x;
                Rat a2 = (total - 4 * s.a[0]) / 2;
                if (a2.get_den() != 1) continue;
                s.a[1] = a2;
                break;
            }
            case Family::E8: {
                Rat total = 2 * (s.b[0] + s.b[1] + s.b[2]) + s.c[4];
                for (const Rat& x : s.c) total += x;
                Rat a2 = (total - 3 * s.a[0]) / 3;
                if (a2.get_den() != 1) continue;
                s.a[1] = a2;
                break;
            }
        }
        try {
            s = validate_spectrum(kind, std::move(s));
        } catch (const Error&) {
            continue;
        }
        SignVerdict v;
        try {
            v = predicate(s);
        } catch (const OrderingViolation&) {
            continue;
        }
        if (v.verdict != Verdict::PositiveDefinite &&
            v.verdict != Verdict::NegativeDefinite)
            continue;
        if (!face.empty() && v.matched_case != face) continue;
        std::vector<Rat> key = s.a;
        key.insert(key.end(), s.b.begin(), s.b.end());
        key.insert(key.end(), s.c.begin(), s.c.end());
        if (!seen.insert(key).second) continue;
        out.push_back(s);
    }
    if (int(out.size()) < count)
        throw SamplingExhausted("could not realize enough lattice points");
    return out;
}

}  // namespace rt
