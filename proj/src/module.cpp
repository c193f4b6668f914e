#include "linprod/module.hpp"

#include <algorithm>
#include <limits>

namespace linprod {

VecPoly VecPoly::operator+(const VecPoly& o) const {
    VecPoly r(*this);
    for (int i = 0; i < rank(); ++i) r.comps_[i] += o.comps_[i];
    return r;
}

VecPoly VecPoly::operator-(const VecPoly& o) const {
    VecPoly r(*this);
    for (int i = 0; i < rank(); ++i) r.comps_[i] -= o.comps_[i];
    return r;
}

VecPoly VecPoly::mul_term(const Monomial& m, const Coeff& c) const {
    VecPoly r(*this);
    for (int i = 0; i < rank(); ++i) r.comps_[i] = r.comps_[i].mul_term(m, c);
    return r;
}

MultiDegree VecPoly::multidegree(const std::vector<MultiDegree>& shifts) const {
    bool found = false;
    MultiDegree d;
    for (int i = 0; i < rank(); ++i) {
        if (comps_[i].is_zero()) continue;
        MultiDegree e = comps_[i].multidegree() + shifts[i];
        if (!found) {
            d = e;
            found = true;
        } else if (e != d) {
            throw HomogeneityError("inhomogeneous module element");
        }
    }
    if (!found) throw Error("multidegree of zero module element");
    return d;
}

namespace {

struct MTerm {
    int comp;
    Monomial mono;
    Coeff coeff;
};

// Position-over-term: lower component index is greater.
int mcompare(const MonomialOrder& ord, int ca, const Monomial& ma, int cb, const Monomial& mb) {
    if (ca != cb) return ca < cb ? 1 : -1;
    return ord.compare(ma, mb);
}

using MOPoly = std::vector<MTerm>;

MOPoly to_mopoly(const VecPoly& v, const MonomialOrder& ord) {
    MOPoly t;
    for (int i = 0; i < v.rank(); ++i)
        for (const auto& term : v.comp(i).terms()) t.push_back({i, term.mono, term.coeff});
    std::sort(t.begin(), t.end(), [&](const MTerm& a, const MTerm& b) {
        return mcompare(ord, a.comp, a.mono, b.comp, b.mono) > 0;
    });
    return t;
}

VecPoly to_vecpoly(const RingPtr& ring, int rank, const MOPoly& t) {
    std::vector<std::vector<Term>> comps(rank);
    for (const auto& mt : t) comps[mt.comp].push_back({mt.mono, mt.coeff});
    VecPoly v(ring, rank);
    for (int i = 0; i < rank; ++i) v.comp(i) = Polynomial(ring, std::move(comps[i]));
    return v;
}

// r = a - c * x^m * b
MOPoly maxpy(const MOPoly& a, const Coeff& c, const Monomial& m, const MOPoly& b,
             const MonomialOrder& ord) {
    MOPoly r;
    r.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        Monomial bm = b[j].mono * m;
        int cmp = mcompare(ord, a[i].comp, a[i].mono, b[j].comp, bm);
        if (cmp > 0) {
            r.push_back(a[i++]);
        } else if (cmp < 0) {
            r.push_back({b[j].comp, std::move(bm), -(c * b[j].coeff)});
            ++j;
        } else {
            Coeff s = a[i].coeff - c * b[j].coeff;
            if (!s.is_zero()) r.push_back({a[i].comp, a[i].mono, std::move(s)});
            ++i, ++j;
        }
    }
    for (; i < a.size(); ++i) r.push_back(a[i]);
    for (; j < b.size(); ++j) r.push_back({b[j].comp, b[j].mono * m, -(c * b[j].coeff)});
    return r;
}

struct MEngine {
    const MonomialOrder& ord;
    long budget;
    RingPtr ring;
    int ngens;  // width of representation vectors
    long steps = 0;

    void tick() {
        if (++steps > budget) throw BudgetError("module reduction budget exhausted", steps);
    }

    // Full normal form; also updates rep if tracking (rep entries over gens).
    MOPoly reduce(MOPoly h, const std::vector<MOPoly>& basis,
                  const std::vector<std::vector<Polynomial>>* basis_reps,
                  std::vector<Polynomial>* rep) {
        MOPoly out;
        while (!h.empty()) {
            bool hit = false;
            for (std::size_t k = 0; k < basis.size(); ++k) {
                const auto& g = basis[k];
                if (g.empty()) continue;
                if (g.front().comp == h.front().comp && g.front().mono.divides(h.front().mono)) {
                    tick();
                    Coeff c = h.front().coeff / g.front().coeff;
                    Monomial m = h.front().mono / g.front().mono;
                    h = maxpy(h, c, m, g, ord);
                    if (rep) {
                        Polynomial t = Polynomial::monomial(ring, m, c);
                        for (int i = 0; i < ngens; ++i)
                            (*rep)[i] -= t * (*basis_reps)[k][i];
                    }
                    hit = true;
                    break;
                }
            }
            if (!hit) {
                out.push_back(h.front());
                h.erase(h.begin());
            }
        }
        return out;
    }
};

}  // namespace

ModuleGB module_groebner(const std::vector<VecPoly>& gens, const MonomialOrder& ord,
                         const GBOptions& opts) {
    ModuleGB res;
    RingPtr ring;
    int rank = 0;
    std::vector<MOPoly> g;
    std::vector<std::vector<Polynomial>> reps;
    int n = static_cast<int>(gens.size());
    for (int i = 0; i < n; ++i) {
        if (gens[i].is_zero()) continue;
        if (!ring) {
            ring = gens[i].ring();
            rank = gens[i].rank();
        }
        g.push_back(to_mopoly(gens[i], ord));
        std::vector<Polynomial> rep(n, Polynomial::zero(gens[i].ring()));
        rep[i] = Polynomial::constant(gens[i].ring(), Coeff::one(gens[i].ring()->field()));
        reps.push_back(std::move(rep));
    }
    if (g.empty()) return res;
    MEngine eng{ord, opts.step_budget, ring, n};

    struct PK {
        int deg;
        int comp;
        Monomial l;
        int i, j;
    };
    auto pk_less = [&](const PK& a, const PK& b) {
        if (a.deg != b.deg) return a.deg < b.deg;
        if (a.comp != b.comp) return a.comp < b.comp;
        int c = ord.compare(a.l, b.l);
        if (c != 0) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };
    std::vector<PK> queue;
    auto push_pairs = [&](int m) {
        for (int i = 0; i < m; ++i) {
            if (g[i].front().comp != g[m].front().comp) continue;
            Monomial l = lcm(g[i].front().mono, g[m].front().mono);
            queue.push_back({l.degree(), g[i].front().comp, l, i, m});
        }
        std::sort(queue.begin(), queue.end(), pk_less);
    };
    for (int m = 1; m < static_cast<int>(g.size()); ++m) push_pairs(m);

    while (!queue.empty()) {
        PK p = queue.front();
        queue.erase(queue.begin());
        const MOPoly &f1 = g[p.i], &f2 = g[p.j];
        Monomial m1 = p.l / f1.front().mono, m2 = p.l / f2.front().mono;
        // s = (1/lc1) x^m1 f1 - (1/lc2) x^m2 f2
        MOPoly a;
        Coeff c1 = f1.front().coeff.inverse();
        for (const auto& t : f1) a.push_back({t.comp, t.mono * m1, t.coeff * c1});
        MOPoly s = maxpy(a, f2.front().coeff.inverse(), m2, f2, ord);
        std::vector<Polynomial> rep(n, Polynomial::zero(ring));
        Polynomial t1 = Polynomial::monomial(ring, m1, c1);
        Polynomial t2 = Polynomial::monomial(ring, m2, f2.front().coeff.inverse());
        for (int i = 0; i < n; ++i) rep[i] = t1 * reps[p.i][i] - t2 * reps[p.j][i];
        MOPoly r = eng.reduce(std::move(s), g, &reps, &rep);
        if (!r.empty()) {
            g.push_back(std::move(r));
            reps.push_back(std::move(rep));
            push_pairs(static_cast<int>(g.size()) - 1);
        }
    }

    for (std::size_t k = 0; k < g.size(); ++k) {
        res.basis.push_back(to_vecpoly(ring, rank, g[k]));
        res.reps.push_back(reps[k]);
    }
    return res;
}

VecPoly module_normal_form(const VecPoly& f, const std::vector<VecPoly>& basis,
                           const MonomialOrder& ord) {
    if (f.is_zero()) return f;
    MEngine eng{ord, std::numeric_limits<long>::max(), f.ring(), 0};
    std::vector<MOPoly> b;
    for (const auto& v : basis)
        if (!v.is_zero()) b.push_back(to_mopoly(v, ord));
    return to_vecpoly(f.ring(), f.rank(), eng.reduce(to_mopoly(f, ord), b, nullptr, nullptr));
}

bool module_contains(const VecPoly& f, const std::vector<VecPoly>& gens,
                     const MonomialOrder& ord, const GBOptions& opts) {
    if (f.is_zero()) return true;
    auto gb = module_groebner(gens, ord, opts);
    return module_normal_form(f, gb.basis, ord).is_zero();
}

std::vector<VecPoly> module_syzygies(const std::vector<VecPoly>& gens, const MonomialOrder& ord,
                                     const GBOptions& opts) {
    int n = static_cast<int>(gens.size());
    if (n == 0) return {};
    RingPtr ring = gens.front().ring();
    ModuleGB gb = module_groebner(gens, ord, opts);
    int t = static_cast<int>(gb.basis.size());
    MEngine eng{ord, opts.step_budget * 4, ring, t};

    std::vector<MOPoly> g;
    for (const auto& v : gb.basis) g.push_back(to_mopoly(v, ord));

    std::vector<VecPoly> syz;
    Coeff one = Coeff::one(ring->field());

    // Schreyer-style syzygies of the basis: every same-component S-pair
    // reduces to zero; the tracked quotients give a syzygy of gb.basis,
    // pushed forward to a syzygy of the input via the representations.
    std::vector<std::vector<Polynomial>> idreps(t, std::vector<Polynomial>(t, Polynomial::zero(ring)));
    for (int i = 0; i < t; ++i) idreps[i][i] = Polynomial::constant(ring, one);

    auto push_syzygy = [&](const std::vector<Polynomial>& tau) {
        // syzygy of input gens: sum_k tau[k] * reps[k]
        VecPoly s(ring, n);
        for (int k = 0; k < t; ++k)
            for (int i = 0; i < n; ++i)
                if (!tau[k].is_zero() && !gb.reps[k][i].is_zero())
                    s.comp(i) += tau[k] * gb.reps[k][i];
        if (!s.is_zero()) syz.push_back(std::move(s));
    };

    for (int i = 0; i < t; ++i) {
        for (int j = i + 1; j < t; ++j) {
            if (g[i].front().comp != g[j].front().comp) continue;
            Monomial l = lcm(g[i].front().mono, g[j].front().mono);
            Monomial m1 = l / g[i].front().mono, m2 = l / g[j].front().mono;
            Coeff c1 = g[i].front().coeff.inverse(), c2 = g[j].front().coeff.inverse();
            MOPoly a;
            for (const auto& term : g[i]) a.push_back({term.comp, term.mono * m1, term.coeff * c1});
            MOPoly s = maxpy(a, c2, m2, g[j], ord);
            std::vector<Polynomial> tau(t, Polynomial::zero(ring));
            tau[i] = Polynomial::monomial(ring, m1, c1);
            tau[j] = -Polynomial::monomial(ring, m2, c2);
            MOPoly r = eng.reduce(std::move(s), g, &idreps, &tau);
            if (!r.empty()) throw Error("S-pair of a Groebner basis did not reduce to zero");
            push_syzygy(tau);
        }
    }

    // Relations h_i - sum_k B[k][i] g_k contribute I - A*B syzygies.
    for (int i = 0; i < n; ++i) {
        if (gens[i].is_zero()) {
            VecPoly s(ring, n);
            s.comp(i) = Polynomial::constant(ring, one);
            syz.push_back(std::move(s));
            continue;
        }
        std::vector<Polynomial> beta(t, Polynomial::zero(ring));
        MOPoly h = to_mopoly(gens[i], ord);
        MOPoly r = eng.reduce(std::move(h), g, &idreps, &beta);
        if (!r.empty()) throw Error("generator did not reduce against its own Groebner basis");
        // beta now holds -B column; h_i + sum beta[k] g_k = 0
        VecPoly s(ring, n);
        s.comp(i) = Polynomial::constant(ring, one);
        for (int k = 0; k < t; ++k)
            for (int v = 0; v < n; ++v)
                if (!beta[k].is_zero() && !gb.reps[k][v].is_zero())
                    s.comp(v) += beta[k] * gb.reps[k][v];
        if (!s.is_zero()) syz.push_back(std::move(s));
    }
    return syz;
}

std::vector<VecPoly> minimalize_module(std::vector<VecPoly> gens,
                                       const std::vector<MultiDegree>& shifts,
                                       const MonomialOrder& ord, const GBOptions& opts) {
    std::vector<VecPoly> in;
    for (auto& v : gens)
        if (!v.is_zero()) in.push_back(std::move(v));
    if (in.empty()) return in;
    std::stable_sort(in.begin(), in.end(), [&](const VecPoly& a, const VecPoly& b) {
        return total(a.multidegree(shifts)) < total(b.multidegree(shifts));
    });
    std::vector<VecPoly> kept;
    for (auto& v : in) {
        if (!kept.empty() && module_contains(v, kept, ord, opts)) continue;
        kept.push_back(std::move(v));
    }
    return kept;
}

}  // namespace linprod
