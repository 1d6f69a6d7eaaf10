#include "rt/spectrum.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "rt/errors.hpp"

namespace rt {

int FamilyKind::n() const {
    switch (tag) {
        case Family::Hypergeometric: return m;
        case Family::Even: return 2 * m;
        case Family::Odd: return 2 * m + 1;
        case Family::ExtraE8hat: return 6;
        case Family::E8: return 6;
    }
    return 0;
}

std::string FamilyKind::name() const {
    switch (tag) {
        case Family::Hypergeometric: return "hg:" + std::to_string(m);
        case Family::Even: return "even:" + std::to_string(m);
        case Family::Odd: return "odd:" + std::to_string(m);
        case Family::ExtraE8hat: return "extra";
        case Family::E8: return "e8";
    }
    return "?";
}

FamilyKind parse_family(const std::string& text) {
    std::string base = text;
    int m = 0;
    if (auto pos = text.find(':'); pos != std::string::npos) {
        base = text.substr(0, pos);
        m = std::stoi(text.substr(pos + 1));
    }
    if (base == "hg" || base == "hypergeometric") return {Family::Hypergeometric, m};
    if (base == "even") return {Family::Even, m};
    if (base == "odd") return {Family::Odd, m};
    if (base == "extra") return {Family::ExtraE8hat, 0};
    if (base == "e8") return {Family::E8, 0};
    throw SchemaError("unknown family tag: " + text);
}

std::vector<std::pair<Rat, int>> TripleSpectrum::a_eigs() const {
    switch (kind.tag) {
        case Family::Hypergeometric: return {{a[0], 1}, {a[1], kind.m - 1}};
        case Family::Even: return {{a[0], kind.m}, {a[1], kind.m}};
        case Family::Odd: return {{a[0], kind.m + 1}, {a[1], kind.m}};
        case Family::ExtraE8hat: return {{a[0], 4}, {a[1], 2}};
        case Family::E8: return {{a[0], 3}, {a[1], 3}};
    }
    return {};
}

std::vector<std::pair<Rat, int>> TripleSpectrum::b_eigs() const {
    std::vector<std::pair<Rat, int>> out;
    switch (kind.tag) {
        case Family::Hypergeometric:
            for (const Rat& x : b) out.emplace_back(x, 1);
            return out;
        case Family::Even: return {{b[0], 1}, {b[1], kind.m - 1}, {b[2], kind.m}};
        case Family::Odd: return {{b[0], 1}, {b[1], kind.m}, {b[2], kind.m}};
        case Family::ExtraE8hat:
        case Family::E8: return {{b[0], 2}, {b[1], 2}, {b[2], 2}};
    }
    return out;
}

std::vector<std::pair<Rat, int>> TripleSpectrum::c_eigs() const {
    std::vector<std::pair<Rat, int>> out;
    if (kind.tag == Family::E8) {
        for (int i = 0; i < 4; ++i) out.emplace_back(c[i], 1);
        out.emplace_back(c[4], 2);
        return out;
    }
    for (const Rat& x : c) out.emplace_back(x, 1);
    return out;
}

static Rat weighted_sum(const std::vector<std::pair<Rat, int>>& eigs) {
    Rat s;
    for (auto& [v, mult] : eigs) s += mult * v;
    return s;
}

static bool all_distinct(const std::vector<Rat>& xs) {
    std::set<Rat> seen(xs.begin(), xs.end());
    return seen.size() == xs.size();
}

TripleSpectrum validate_spectrum(const FamilyKind& kind, TripleSpectrum raw) {
    raw.kind = kind;
    size_t want_b = kind.tag == Family::Hypergeometric ? size_t(kind.m) : 3;
    size_t want_c;
    switch (kind.tag) {
        case Family::Hypergeometric: want_c = kind.m; break;
        case Family::Even: want_c = 2 * kind.m; break;
        case Family::Odd: want_c = 2 * kind.m + 1; break;
        case Family::ExtraE8hat: want_c = 6; break;
        case Family::E8: want_c = 5; break;
    }
    if ((kind.tag == Family::Hypergeometric || kind.tag == Family::Even ||
         kind.tag == Family::Odd) &&
        kind.m < 2)
        throw DimensionMismatch("series families need m >= 2");
    if (raw.a.size() != 2 || raw.b.size() != want_b || raw.c.size() != want_c)
        throw DimensionMismatch("eigenvalue list lengths do not match the family");
    if (raw.a[0] == raw.a[1]) throw DegenerateSpectrum("a1 = a2");
    if (!all_distinct(raw.b)) throw DegenerateSpectrum("b values collide");
    if (!all_distinct(raw.c)) throw DegenerateSpectrum("c values collide");
    if (weighted_sum(raw.a_eigs()) !=
        weighted_sum(raw.b_eigs()) + weighted_sum(raw.c_eigs()))
        throw TraceViolation("trace condition fails");
    return raw;
}

Rat p_form(const TripleSpectrum& s, int i, int j, int k) {
    return s.c[i - 1] + s.b[j - 1] - s.a[k - 1];
}

Rat q_form(const TripleSpectrum& s, int i, int j) {
    return s.c[i - 1] + s.c[j - 1] + s.b[1] + s.b[2] - s.a[0] - s.a[1];
}

Rat p_extra_form(const TripleSpectrum& s, int i, int j) {
    return s.b[i - 1] + s.c[j - 1] - s.a[0];
}

Rat q_extra_form(const TripleSpectrum& s, int i, int j, int k) {
    Rat half_sum;
    for (const Rat& x : s.c) half_sum += x;
    half_sum /= 2;
    return s.c[i - 1] + s.c[j - 1] + s.c[k - 1] - half_sum;
}

// --------------------------------------------------------------- S', S''

static std::vector<Rat> e8_entry_forms(const TripleSpectrum& s) {
    const Rat &a1 = s.a[0], &a2 = s.a[1];
    const Rat &b1 = s.b[0], &b2 = s.b[1], &b3 = s.b[2];
    const Rat &c1 = s.c[0], &c3 = s.c[2], &c4 = s.c[3], &c5 = s.c[4];
    return {
        a1 + a2 - b1 - b3 - c1 - c5,
        -a2 + b3 + c1,
        a1 - b1 - c5,
        -a1 - 2 * a2 + b1 + b2 + b3 + c1 + c3 + c5,
        -a1 - a2 + b2 + b3 + s.c[1] + c4,
        -a1 + b2 + c4,
        2 * a1 + a2 - b1 - 2 * b2 - c3 - c4 - c5,
        a1 + a2 - b2 - b3 - c1 - c3,
        -a1 - a2 + b1 + b2 + c4 + c5,
        -a2 + b1 + c5,
    };
}

static bool forms_nonzero(const std::vector<Rat>& forms) {
    return std::none_of(forms.begin(), forms.end(),
                        [](const Rat& f) { return f == 0; });
}

bool in_S_double_prime(const TripleSpectrum& s) {
    int m = s.kind.m;
    switch (s.kind.tag) {
        case Family::Hypergeometric:
            for (int i = 1; i <= m; ++i)
                for (int j = 1; j <= m; ++j)
                    if (s.b[i - 1] + s.c[j - 1] - s.a[1] == 0) return false;
            return true;
        case Family::Even: {
            int n = 2 * m;
            for (int i = 1; i <= n; ++i) {
                if (p_form(s, i, 3, 1) == 0 || p_form(s, i, 3, 2) == 0) return false;
                for (int j = 1; j <= n; ++j)
                    if (i != j && q_form(s, i, j) == 0) return false;
            }
            return true;
        }
        case Family::Odd: {
            int n = 2 * m + 1;
            for (int i = 1; i <= n; ++i) {
                if (p_form(s, i, 3, 1) == 0 || p_form(s, i, 2, 1) == 0) return false;
                for (int j = 1; j <= n; ++j)
                    if (i != j && q_form(s, i, j) == 0) return false;
            }
            return true;
        }
        case Family::ExtraE8hat:
            for (int i = 1; i <= 3; ++i)
                for (int j = 1; j <= 6; ++j)
                    if (p_extra_form(s, i, j) == 0) return false;
            for (int i = 1; i <= 4; ++i)
                for (int j = i + 1; j <= 5; ++j)
                    for (int k = j + 1; k <= 6; ++k)
                        if (q_extra_form(s, i, j, k) == 0) return false;
            return true;
        case Family::E8:
            // No published genericity locus; we require every linear form that
            // appears as a matrix entry to be nonzero (documented extension).
            return forms_nonzero(e8_entry_forms(s));
    }
    return false;
}

bool in_S_prime(const TripleSpectrum& s) {
    int m = s.kind.m;
    switch (s.kind.tag) {
        case Family::Hypergeometric:
            // Gram denominators: b_i + c_k - a2 with k <= m+1-i.
            for (int i = 1; i <= m; ++i)
                for (int k = 1; k <= m + 1 - i; ++k)
                    if (s.b[i - 1] + s.c[k - 1] - s.a[1] == 0) return false;
            return true;
        case Family::Even: {
            int n = 2 * m;
            for (int i = 1; i <= n; ++i) {
                if (i <= m && p_form(s, i, 3, 2) == 0) return false;
                for (int k = 1; k < n + 1 - i; ++k)
                    if (k != i && q_form(s, i, k) == 0) return false;
            }
            return true;
        }
        case Family::Odd: {
            int n = 2 * m + 1;
            for (int i = 1; i <= n; ++i) {
                if (i <= m && p_form(s, i, 2, 1) == 0) return false;
                for (int k = 1; k < n + 1 - i; ++k)
                    if (k != i && q_form(s, i, k) == 0) return false;
            }
            return true;
        }
        case Family::ExtraE8hat:
            for (int i = 1; i <= 3; ++i)
                for (int j = 1; j <= 6; ++j)
                    if (i == 1 || j <= i + 3)
                        if (p_extra_form(s, i, j) == 0) return false;
            return q_extra_form(s, 1, 4, 6) != 0 && q_extra_form(s, 1, 5, 6) != 0;
        case Family::E8:
            return in_S_double_prime(s);
    }
    return false;
}

// --------------------------------------------------------------- sampling

namespace {

Rat rand_rat(std::mt19937_64& rng, int bound) {
    std::uniform_int_distribution<int> num(-bound, bound);
    std::uniform_int_distribution<int> den(1, 4);
    return rat(num(rng), den(rng));
}

}  // namespace

TripleSpectrum sample_generic_spectrum(const FamilyKind& kind, std::uint64_t seed,
                                       int bound) {
    if (bound < 10) throw SamplingExhausted("bound must be at least 10");
    std::mt19937_64 rng(seed);
    int m = kind.m;
    for (int attempt = 0; attempt < 100000; ++attempt) {
        TripleSpectrum s;
        s.kind = kind;
        auto draw = [&](int count) -> std::vector<Rat> {
            std::vector<Rat> v(count);
            for (Rat& x : v) x = rand_rat(rng, bound);
            return v;
        };
        Rat a2 = rand_rat(rng, bound);
        Rat a1;
        switch (kind.tag) {
            case Family::Hypergeometric: {
                s.b = draw(m);
                s.c = draw(m);
                Rat total;
                for (const Rat& x : s.b) total += x;
                for (const Rat& x : s.c) total += x;
                a1 = total - (m - 1) * a2;
                break;
            }
            case Family::Even: {
                s.b = draw(3);
                s.c = draw(2 * m);
                Rat total = s.b[0] + (m - 1) * s.b[1] + m * s.b[2];
                for (const Rat& x : s.c) total += x;
                a1 = total / m - a2;
                break;
            }
            case Family::Odd: {
                s.b = draw(3);
                s.c = draw(2 * m + 1);
                Rat total = s.b[0] + m * s.b[1] + m * s.b[2];
                for (const Rat& x : s.c) total += x;
                a1 = (total - m * a2) / (m + 1);
                break;
            }
            case Family::ExtraE8hat: {
                s.b = draw(3);
                s.c = draw(6);
                Rat total = 2 * (s.b[0] + s.b[1] + s.b[2]);
                for (const Rat& x : s.c) total += x;
                a1 = (total - 2 * a2) / 4;
                break;
            }
            case Family::E8: {
                s.b = draw(3);
                s.c = draw(5);
                Rat total = 2 * (s.b[0] + s.b[1] + s.b[2]) + s.c[4];
                for (const Rat& x : s.c) total += x;
                a1 = (total - 3 * a2) / 3;
                break;
            }
        }
        s.a = {a1, a2};
        try {
            s = validate_spectrum(kind, std::move(s));
        } catch (const Error&) {
            continue;
        }
        if (!in_S_double_prime(s)) continue;
        return s;
    }
    throw SamplingExhausted("no generic spectrum found within the retry budget");
}

// Number of vanishing forms in the family's S'' form multiset (q forms count
// once per ordered pair, matching the acceptance convention of "exactly one").
static int zero_form_count(const TripleSpectrum& s) {
    int m = s.kind.m;
    int zeros = 0;
    switch (s.kind.tag) {
        case Family::Hypergeometric:
            for (int i = 1; i <= m; ++i)
                for (int j = 1; j <= m; ++j)
                    if (s.b[i - 1] + s.c[j - 1] - s.a[1] == 0) ++zeros;
            return zeros;
        case Family::Even:
        case Family::Odd: {
            int n = s.kind.n();
            for (int i = 1; i <= n; ++i) {
                if (p_form(s, i, 3, 1) == 0) ++zeros;
                if (p_form(s, i, s.kind.tag == Family::Even ? 3 : 2,
                           s.kind.tag == Family::Even ? 2 : 1) == 0)
                    ++zeros;
                for (int j = 1; j <= n; ++j)
                    if (i != j && q_form(s, i, j) == 0) ++zeros;
            }
            return zeros;
        }
        default:
            throw DimensionMismatch("hyperplane sampling not defined here");
    }
}

TripleSpectrum sample_hyperplane_spectrum(const FamilyKind& kind, Hyperplane h,
                                          int i, std::uint64_t seed, int bound) {
    if (bound < 10) throw SamplingExhausted("bound must be at least 10");
    const int m = kind.m;
    switch (h) {
        case Hyperplane::EvenP32:
        case Hyperplane::EvenP31:
            if (kind.tag != Family::Even || i < 1 || i > 2 * m)
                throw DimensionMismatch("bad hyperplane request");
            break;
        case Hyperplane::OddP21:
            if (kind.tag != Family::Odd || i < m + 1 || i > 2 * m)
                throw DimensionMismatch("bad hyperplane request");
            break;
        case Hyperplane::HgSub:
            if (kind.tag != Family::Hypergeometric || i < 1 || i > m)
                throw DimensionMismatch("bad hyperplane request");
            break;
    }
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 100000; ++attempt) {
        TripleSpectrum s;
        s.kind = kind;
        int nb = kind.tag == Family::Hypergeometric ? m : 3;
        s.b.clear();
        s.c.clear();
        for (int k = 0; k < nb; ++k) s.b.push_back(rand_rat(rng, bound));
        for (int k = 0; k < kind.n(); ++k) s.c.push_back(rand_rat(rng, bound));
        Rat a1, a2;
        Rat csum;
        switch (h) {
            case Hyperplane::EvenP32: {
                a2 = rand_rat(rng, bound);
                s.c[i - 1] = a2 - s.b[2];
                for (const Rat& x : s.c) csum += x;
                a1 = (s.b[0] + (m - 1) * s.b[1] + m * s.b[2] + csum) / m - a2;
                break;
            }
            case Hyperplane::EvenP31: {
                a2 = rand_rat(rng, bound);
                for (int k = 0; k < 2 * m; ++k)
                    if (k != i - 1) csum += s.c[k];
                a1 = (s.b[0] + (m - 1) * s.b[1] + (m - 1) * s.b[2] + csum -
                      m * a2) /
                     (m - 1);
                s.c[i - 1] = a1 - s.b[2];
                break;
            }
            case Hyperplane::OddP21: {
                a2 = rand_rat(rng, bound);
                for (int k = 0; k < 2 * m + 1; ++k)
                    if (k != i - 1) csum += s.c[k];
                a1 = (s.b[0] + (m - 1) * s.b[1] + m * s.b[2] + csum - m * a2) / m;
                s.c[i - 1] = a1 - s.b[1];
                break;
            }
            case Hyperplane::HgSub: {
                a2 = s.b[i - 1] + s.c[m - i];
                for (const Rat& x : s.b) csum += x;
                for (const Rat& x : s.c) csum += x;
                a1 = csum - (m - 1) * a2;
                break;
            }
        }
        s.a = {a1, a2};
        try {
            s = validate_spectrum(kind, std::move(s));
        } catch (const Error&) {
            continue;
        }
        if (zero_form_count(s) != 1) continue;
        return s;
    }
    throw SamplingExhausted("no hyperplane spectrum found within the retry budget");
}

}  // namespace rt
