#include "linprod/groebner.hpp"

#include <algorithm>
#include <set>

namespace linprod {

namespace {

// Engine-internal polynomial: terms sorted descending under the engine
// order, so the leading term is the front.
using OPoly = std::vector<Term>;

OPoly to_opoly(const Polynomial& p, const MonomialOrder& ord) {
    OPoly t = p.terms();
    std::sort(t.begin(), t.end(),
              [&](const Term& a, const Term& b) { return ord.greater(a.mono, b.mono); });
    return t;
}

Polynomial to_poly(const RingPtr& ring, OPoly t) { return Polynomial(ring, std::move(t)); }

// r = a - c * x^m * b
OPoly axpy(const OPoly& a, const Coeff& c, const Monomial& m, const OPoly& b,
           const MonomialOrder& ord) {
    OPoly r;
    r.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        Monomial bm = b[j].mono * m;
        int cmp = ord.compare(a[i].mono, bm);
        if (cmp > 0) {
            r.push_back(a[i++]);
        } else if (cmp < 0) {
            r.push_back({std::move(bm), -(c * b[j].coeff)});
            ++j;
        } else {
            Coeff s = a[i].coeff - c * b[j].coeff;
            if (!s.is_zero()) r.push_back({a[i].mono, std::move(s)});
            ++i, ++j;
        }
    }
    for (; i < a.size(); ++i) r.push_back(a[i]);
    for (; j < b.size(); ++j) r.push_back({b[j].mono * m, -(c * b[j].coeff)});
    return r;
}

struct Engine {
    const MonomialOrder& ord;
    long budget;
    long steps = 0;

    void tick() {
        if (++steps > budget) throw BudgetError("reduction step budget exhausted", steps);
    }

    // Full normal form of h against basis (all terms reduced).
    OPoly reduce(OPoly h, const std::vector<OPoly>& basis) {
        OPoly out;
        while (!h.empty()) {
            bool hit = false;
            for (const auto& g : basis) {
                if (g.empty()) continue;
                if (g.front().mono.divides(h.front().mono)) {
                    tick();
                    Coeff c = h.front().coeff / g.front().coeff;
                    Monomial m = h.front().mono / g.front().mono;
                    h = axpy(h, c, m, g, ord);
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

    OPoly spair(const OPoly& f, const OPoly& g) {
        Monomial l = lcm(f.front().mono, g.front().mono);
        Monomial mf = l / f.front().mono, mg = l / g.front().mono;
        // s = (1/lc f) x^mf f - (1/lc g) x^mg g
        OPoly a;
        a.reserve(f.size());
        Coeff cf = f.front().coeff.inverse();
        for (const auto& t : f) a.push_back({t.mono * mf, t.coeff * cf});
        return axpy(a, g.front().coeff.inverse(), mg, g, ord);
    }
};

struct PairKey {
    int deg;
    Monomial lcm_mono;
    int i, j;
};

}  // namespace

std::vector<Polynomial> buchberger(std::vector<Polynomial> gens, const MonomialOrder& ord,
                                   const GBOptions& opts) {
    RingPtr ring;
    std::vector<OPoly> g;
    for (auto& p : gens) {
        if (p.is_zero()) continue;
        if (!ring) ring = p.ring();
        g.push_back(to_opoly(p, ord));
    }
    if (g.empty()) return {};
    Engine eng{ord, opts.step_budget};

    auto pair_less = [&](const PairKey& a, const PairKey& b) {
        if (a.deg != b.deg) return a.deg < b.deg;
        int c = ord.compare(a.lcm_mono, b.lcm_mono);
        if (c != 0) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };
    std::set<PairKey, decltype(pair_less)> pairs(pair_less);
    std::set<std::pair<int, int>> done;
    auto push_pairs = [&](int n) {
        for (int i = 0; i < n; ++i) {
            Monomial l = lcm(g[i].front().mono, g[n].front().mono);
            pairs.insert({l.degree(), l, i, n});
        }
    };
    for (int n = 1; n < static_cast<int>(g.size()); ++n) push_pairs(n);

    while (!pairs.empty()) {
        PairKey p = *pairs.begin();
        pairs.erase(pairs.begin());
        done.insert({p.i, p.j});
        // product criterion
        if (coprime(g[p.i].front().mono, g[p.j].front().mono)) continue;
        // chain criterion
        bool skip = false;
        for (int k = 0; k < static_cast<int>(g.size()) && !skip; ++k) {
            if (k == p.i || k == p.j) continue;
            if (!g[k].front().mono.divides(p.lcm_mono)) continue;
            if (done.count({std::min(p.i, k), std::max(p.i, k)}) &&
                done.count({std::min(p.j, k), std::max(p.j, k)}))
                skip = true;
        }
        if (skip) continue;
        OPoly r = eng.reduce(eng.spair(g[p.i], g[p.j]), g);
        if (!r.empty()) {
            g.push_back(std::move(r));
            push_pairs(static_cast<int>(g.size()) - 1);
        }
    }

    // minimalize: drop elements whose leading monomial is divisible by another's
    std::sort(g.begin(), g.end(),
              [&](const OPoly& a, const OPoly& b) { return ord.less(a.front().mono, b.front().mono); });
    std::vector<OPoly> minimal;
    for (auto& p : g) {
        bool divisible = false;
        for (const auto& q : minimal)
            if (q.front().mono.divides(p.front().mono)) {
                divisible = true;
                break;
            }
        if (!divisible) minimal.push_back(std::move(p));
    }
    // tail-reduce each element against the others
    std::vector<Polynomial> out;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<OPoly> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        OPoly r = eng.reduce(minimal[i], others);
        Coeff inv = r.front().coeff.inverse();
        for (auto& t : r) t.coeff = t.coeff * inv;
        out.push_back(to_poly(ring, std::move(r)));
    }
    return out;
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       const MonomialOrder& ord) {
    if (f.is_zero()) return f;
    Engine eng{ord, std::numeric_limits<long>::max()};
    std::vector<OPoly> b;
    for (const auto& p : basis)
        if (!p.is_zero()) b.push_back(to_opoly(p, ord));
    return to_poly(f.ring(), eng.reduce(to_opoly(f, ord), b));
}

Polynomial exact_divide(const Polynomial& g, const Polynomial& f) {
    if (f.is_zero()) throw Error("division by zero polynomial");
    const MonomialOrder& ord = g.ring()->default_order();
    OPoly h = to_opoly(g, ord), d = to_opoly(f, ord);
    std::vector<Term> quot;
    while (!h.empty()) {
        if (!d.front().mono.divides(h.front().mono))
            throw Error("polynomial division not exact");
        Coeff c = h.front().coeff / d.front().coeff;
        Monomial m = h.front().mono / d.front().mono;
        quot.push_back({m, c});
        h = axpy(h, c, m, d, ord);
    }
    return Polynomial(g.ring(), std::move(quot));
}

PolyIdeal::PolyIdeal(RingPtr ring, std::vector<Polynomial> gens) : ring_(std::move(ring)) {
    for (auto& p : gens) {
        if (p.is_zero()) continue;
        check_same_ring(ring_, p.ring());
        gens_.push_back(std::move(p));
    }
}

const std::vector<Polynomial>& PolyIdeal::basis(const MonomialOrder& ord,
                                                const GBOptions& opts) const {
    auto it = cache_.find(ord.key());
    if (it != cache_.end()) return it->second;
    auto gb = buchberger(gens_, ord, opts);
    return cache_.emplace(ord.key(), std::move(gb)).first->second;
}

bool PolyIdeal::contains(const Polynomial& f, const GBOptions& opts) const {
    if (f.is_zero()) return true;
    return normal_form(f, basis(ring_->default_order(), opts), ring_->default_order()).is_zero();
}

bool PolyIdeal::contains_ideal(const PolyIdeal& other, const GBOptions& opts) const {
    for (const auto& f : other.gens())
        if (!contains(f, opts)) return false;
    return true;
}

std::vector<Monomial> PolyIdeal::initial_monomials(const MonomialOrder& ord,
                                                   const GBOptions& opts) const {
    std::vector<Monomial> out;
    for (const auto& p : basis(ord, opts)) out.push_back(p.leading(ord).mono);
    return out;
}

bool ideal_equal(const PolyIdeal& a, const PolyIdeal& b, const GBOptions& opts) {
    check_same_ring(a.ring(), b.ring());
    const MonomialOrder& ord = a.ring()->default_order();
    const auto& ga = a.basis(ord, opts);
    const auto& gb = b.basis(ord, opts);
    if (ga.size() != gb.size()) return false;
    for (std::size_t i = 0; i < ga.size(); ++i)
        if (ga[i] != gb[i]) return false;
    return true;
}

std::vector<Polynomial> minimalize_generators(std::vector<Polynomial> gens,
                                              const GBOptions& opts) {
    std::vector<Polynomial> in;
    for (auto& g : gens)
        if (!g.is_zero()) in.push_back(std::move(g));
    if (in.empty()) return in;
    const MonomialOrder& ord = in.front().ring()->default_order();
    std::stable_sort(in.begin(), in.end(), [&](const Polynomial& a, const Polynomial& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return ord.less(a.leading().mono, b.leading().mono);
    });
    std::vector<Polynomial> kept;
    for (auto& g : in) {
        if (kept.empty()) {
            kept.push_back(std::move(g));
            continue;
        }
        auto gb = buchberger(kept, ord, opts);
        if (!normal_form(g, gb, ord).is_zero()) kept.push_back(std::move(g));
    }
    return kept;
}

}  // namespace linprod
