#include "rt/bz.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "rt/errors.hpp"

namespace rt {
namespace {

struct Term {
    int var;
    int coeff;  // +1 or -1
};

struct Equation {
    std::vector<Term> terms;
    long rhs = 0;
};

// All equations of a triangle: boundary segment sums and, per interior
// hexagon ABCDEF, f(A)+f(B)=f(D)+f(E) and f(B)+f(C)=f(E)+f(F).  The third
// relation f(C)+f(D)=f(F)+f(A) is implied; it is asserted on every
// completed filling.
struct System {
    std::vector<Equation> eqs;
    std::vector<std::array<int, 6>> hex_vars;  // A..F indices per hexagon
    long total = 0;                            // global upper bound
};

int index_of(const BZTriangle& t, int ta, int tb) {
    auto it = std::find(t.points.begin(), t.points.end(),
                        std::make_pair(ta, tb));
    if (it == t.points.end())
        throw SchemaError("point outside the triangle lattice");
    return int(it - t.points.begin());
}

System build_system(const BZTriangle& t) {
    System sys;
    const int r = t.r;
    for (int i = 1; i <= r; ++i) {
        // bottom (gamma = 1/2): n_i
        sys.eqs.push_back({{{index_of(t, -2 * i, 2 * i - 1), 1},
                            {index_of(t, -(2 * i + 1), 2 * i), 1}},
                           t.n[i - 1]});
        // left (beta = 1/2): l_i
        sys.eqs.push_back({{{index_of(t, -2 * i, 1), 1},
                            {index_of(t, -(2 * i + 1), 1), 1}},
                           t.l[i - 1]});
        // right (-alpha = r + 1/2): m_i
        sys.eqs.push_back({{{index_of(t, -(2 * r + 1), 2 * i - 1), 1},
                            {index_of(t, -(2 * r + 1), 2 * i), 1}},
                           t.m[i - 1]});
    }
    for (int a = -r; a < 0; ++a)
        for (int b = 1; b < -a; ++b) {
            int A = index_of(t, 2 * a, 2 * b - 1);
            int B = index_of(t, 2 * a - 1, 2 * b);
            int C = index_of(t, 2 * a - 1, 2 * b + 1);
            int D = index_of(t, 2 * a, 2 * b + 1);
            int E = index_of(t, 2 * a + 1, 2 * b);
            int F = index_of(t, 2 * a + 1, 2 * b - 1);
            sys.eqs.push_back({{{A, 1}, {B, 1}, {D, -1}, {E, -1}}, 0});
            sys.eqs.push_back({{{B, 1}, {C, 1}, {E, -1}, {F, -1}}, 0});
            sys.hex_vars.push_back({A, B, C, D, E, F});
        }
    sys.total = std::accumulate(t.l.begin(), t.l.end(), 0L) +
                std::accumulate(t.m.begin(), t.m.end(), 0L) +
                std::accumulate(t.n.begin(), t.n.end(), 0L);
    return sys;
}

struct Box {
    std::vector<long> lo, hi;
};

// Interval propagation to a fixpoint.  Returns false when some interval
// becomes empty (no filling in this branch).
bool propagate(const System& sys, Box& box) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (const Equation& e : sys.eqs) {
            for (const Term& t : e.terms) {
                // c*v = rhs - sum of the other terms; bound the right side.
                long rest_lo = 0, rest_hi = 0;
                for (const Term& u : e.terms) {
                    if (u.var == t.var) continue;
                    if (u.coeff > 0) {
                        rest_lo += box.lo[u.var];
                        rest_hi += box.hi[u.var];
                    } else {
                        rest_lo -= box.hi[u.var];
                        rest_hi -= box.lo[u.var];
                    }
                }
                long vlo, vhi;
                if (t.coeff > 0) {
                    vlo = e.rhs - rest_hi;
                    vhi = e.rhs - rest_lo;
                } else {
                    vlo = rest_lo - e.rhs;
                    vhi = rest_hi - e.rhs;
                }
                if (vlo > box.lo[t.var]) {
                    box.lo[t.var] = vlo;
                    changed = true;
                }
                if (vhi < box.hi[t.var]) {
                    box.hi[t.var] = vhi;
                    changed = true;
                }
                if (box.lo[t.var] > box.hi[t.var]) return false;
            }
        }
    }
    return true;
}

bool solved(const Box& box) {
    for (size_t i = 0; i < box.lo.size(); ++i)
        if (box.lo[i] != box.hi[i]) return false;
    return true;
}

void check_filling(const System& sys, const Box& box) {
    for (const Equation& e : sys.eqs) {
        long s = 0;
        for (const Term& t : e.terms) s += t.coeff * box.lo[t.var];
        if (s != e.rhs) throw SchemaError("propagation left a violated equation");
    }
    // implied third hexagon relation
    for (const auto& h : sys.hex_vars)
        if (box.lo[h[2]] + box.lo[h[3]] != box.lo[h[5]] + box.lo[h[0]])
            throw SchemaError("third hexagon relation violated");
}

long count_rec(const System& sys, Box box, std::vector<Box>* found = nullptr) {
    if (!propagate(sys, box)) return 0;
    if (solved(box)) {
        check_filling(sys, box);
        if (found) found->push_back(box);
        return 1;
    }
    // branch on the tightest undecided variable
    int best = -1;
    long width = 0;
    for (size_t i = 0; i < box.lo.size(); ++i) {
        long w = box.hi[i] - box.lo[i];
        if (w > 0 && (best < 0 || w < width)) {
            best = int(i);
            width = w;
        }
    }
    long cnt = 0;
    for (long x = box.lo[best]; x <= box.hi[best]; ++x) {
        Box sub = box;
        sub.lo[best] = sub.hi[best] = x;
        cnt += count_rec(sys, std::move(sub), found);
    }
    return cnt;
}

Box initial_box(const BZTriangle& t, const System& sys) {
    Box box;
    box.lo.assign(t.points.size(), 0);
    box.hi.assign(t.points.size(), sys.total);
    return box;
}

std::vector<long> pad(std::vector<long> p, int parts) {
    if (int(p.size()) > parts) {
        for (size_t i = parts; i < p.size(); ++i)
            if (p[i] != 0)
                throw SchemaError("partition has too many parts");
        p.resize(parts);
    }
    p.resize(parts, 0);
    return p;
}

}  // namespace

BZTriangle make_triangle(int r, std::vector<long> l, std::vector<long> m,
                         std::vector<long> n) {
    if (r < 1) throw SchemaError("triangle rank must be at least 1");
    if (int(l.size()) != r || int(m.size()) != r || int(n.size()) != r)
        throw SchemaError("boundary label lists must have length r");
    for (const auto* labels : {&l, &m, &n})
        for (long v : *labels)
            if (v < 0) throw SchemaError("boundary labels must be nonnegative");
    BZTriangle t;
    t.r = r;
    t.l = std::move(l);
    t.m = std::move(m);
    t.n = std::move(n);
    for (int tb = 1; tb < 2 * (r + 1); ++tb)
        for (int tw = tb + 1; tw < 2 * (r + 1); ++tw) {
            if (tb % 2 == 0 && tw % 2 == 0) continue;  // both integral
            t.points.emplace_back(-tw, tb);  // 0 < beta < -alpha < r+1
        }
    return t;
}

long count_fillings(const BZTriangle& t) {
    System sys = build_system(t);
    return count_rec(sys, initial_box(t, sys));
}

long lr_oracle(const std::vector<long>& lambda_in, const std::vector<long>& mu,
               const std::vector<long>& nu) {
    std::vector<long> lam = lambda_in;
    while (lam.size() < nu.size()) lam.push_back(0);
    if (lam.size() > nu.size()) {
        for (size_t i = nu.size(); i < lam.size(); ++i)
            if (lam[i] != 0) return 0;
        lam.resize(nu.size());
    }
    long wsum = 0;
    for (size_t i = 0; i < nu.size(); ++i) {
        if (nu[i] < lam[i]) return 0;
        wsum += nu[i] - lam[i];
    }
    if (wsum != std::accumulate(mu.begin(), mu.end(), 0L)) return 0;
    const int rows = int(nu.size());
    const int nvals = int(mu.size());
    // cells in reading order: row by row, right to left
    std::vector<std::pair<int, int>> cells;
    for (int r = 0; r < rows; ++r)
        for (long c = nu[r] - 1; c >= lam[r]; --c) cells.emplace_back(r, int(c));
    std::vector<std::vector<int>> tab(rows);
    for (int r = 0; r < rows; ++r) tab[r].assign(size_t(nu[r]), 0);
    std::vector<long> content(nvals, 0);
    long count = 0;
    auto rec = [&](auto&& self, size_t k) -> void {
        if (k == cells.size()) {
            ++count;
            return;
        }
        auto [r, c] = cells[k];
        for (int v = 1; v <= nvals; ++v) {
            if (content[v - 1] >= mu[v - 1]) continue;
            if (v > 1 && content[v - 2] <= content[v - 1]) continue;  // lattice
            if (c + 1 < nu[r] && tab[r][c + 1] != 0 && v > tab[r][c + 1])
                continue;  // rows weakly increase
            if (r > 0 && c < nu[r - 1] && c >= lam[r - 1] &&
                tab[r - 1][c] != 0 && v <= tab[r - 1][c])
                continue;  // columns strictly increase
            tab[r][c] = v;
            ++content[v - 1];
            self(self, k + 1);
            tab[r][c] = 0;
            --content[v - 1];
        }
    };
    rec(rec, 0);
    return count;
}

BoundaryLabels labels_from_partitions(const std::vector<long>& lambda,
                                      const std::vector<long>& mu,
                                      const std::vector<long>& nu, int r) {
    auto diff = [&](std::vector<long> p) {
        p = pad(std::move(p), r + 1);
        std::vector<long> d;
        for (int i = 0; i < r; ++i) d.push_back(p[i] - p[i + 1]);
        return d;
    };
    return {diff(lambda), diff(mu), diff(nu)};
}

BoundaryLabels gl_to_sl_weights(const TripleSpectrum& s) {
    auto labels = [&](const std::vector<std::pair<Rat, int>>& eigs) {
        std::vector<Rat> vals;
        for (const auto& [v, mult] : eigs)
            for (int k = 0; k < mult; ++k) vals.push_back(v);
        std::sort(vals.begin(), vals.end(),
                  [](const Rat& x, const Rat& y) { return x > y; });
        std::vector<long> out;
        for (size_t i = 0; i + 1 < vals.size(); ++i) {
            Rat d = vals[i] - vals[i + 1];
            if (d.get_den() != 1)
                throw NonIntegral("eigenvalue differences must be integers");
            out.push_back(mpz_get_si(d.get_num_mpz_t()));
        }
        return out;
    };
    return {labels(s.b_eigs()), labels(s.c_eigs()), labels(s.a_eigs())};
}

Rat hg_strip_x(const std::vector<long>& l, const std::vector<long>& m,
               long n_r) {
    const int r = int(l.size());
    long num = 0;
    for (int j = 1; j <= r; ++j) num += (r + 1 - j) * l[j - 1];
    for (int j = 1; j <= r; ++j) num -= j * m[j - 1];
    num += r * n_r;
    return rat(num, r + 1);
}

Filling hg_strip_solution(const std::vector<long>& l,
                          const std::vector<long>& m, long n_r) {
    const int r = int(l.size());
    if (int(m.size()) != r) throw SchemaError("label lists must match in length");
    Rat x = hg_strip_x(l, m, n_r);
    if (x.get_den() != 1 || x < 0)
        throw NoFilling("strip variable x is not a nonnegative integer");
    std::vector<long> n(r, 0);
    n[r - 1] = n_r;
    BZTriangle t = make_triangle(r, l, m, n);
    System sys = build_system(t);
    Box box = initial_box(t, sys);
    // The free variable of the strip sits at (alpha, beta) = (-r, r - 1/2).
    int xi = index_of(t, -2 * r, 2 * r - 1);
    box.lo[xi] = box.hi[xi] = mpz_get_si(x.get_num_mpz_t());
    std::vector<Box> found;
    long cnt = count_rec(sys, std::move(box), &found);
    if (cnt != 1)
        throw NoFilling("strip entries do not determine a unique filling");
    Filling out;
    for (size_t i = 0; i < t.points.size(); ++i)
        out.f[t.points[i]] = found[0].lo[i];
    return out;
}

}  // namespace rt
