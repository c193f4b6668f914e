#include "linprod/idealops.hpp"

#include <algorithm>

namespace linprod {

RingPtr ring_with_front_vars(const RingPtr& base, const std::vector<std::string>& front,
                             const std::vector<MultiDegree>& front_degrees) {
    std::vector<std::string> vars = front;
    for (const auto& v : base->var_names()) vars.push_back(v);
    std::vector<MultiDegree> grading;
    for (std::size_t i = 0; i < front.size(); ++i)
        grading.push_back(front_degrees.empty() ? MultiDegree(base->grading_width(), 0)
                                                : front_degrees[i]);
    for (int i = 0; i < base->nvars(); ++i) grading.push_back(base->var_degree(i));
    return Ring::make(std::move(vars), base->field(), std::nullopt, std::move(grading));
}

Polynomial map_vars(const Polynomial& f, const RingPtr& target, const std::vector<int>& var_map) {
    std::vector<Term> terms;
    for (const auto& t : f.terms()) {
        std::vector<int> e(target->nvars(), 0);
        for (int i = 0; i < t.mono.nvars(); ++i) {
            if (t.mono.exp(i) == 0) continue;
            if (var_map[i] < 0) throw Error("variable cannot be mapped out of the ring");
            e[var_map[i]] += t.mono.exp(i);
        }
        terms.push_back({Monomial(std::move(e)), t.coeff});
    }
    return Polynomial(target, std::move(terms));
}

std::vector<Polynomial> eliminate(const PolyIdeal& ideal, const std::vector<int>& kill,
                                  const GBOptions& opts) {
    const RingPtr& ring = ideal.ring();
    std::vector<int> rest;
    std::vector<bool> killed(ring->nvars(), false);
    for (int i : kill) killed[i] = true;
    for (int i = 0; i < ring->nvars(); ++i)
        if (!killed[i]) rest.push_back(i);
    MonomialOrder ord = MonomialOrder::block({kill, rest});
    std::vector<Polynomial> out;
    for (const auto& g : ideal.basis(ord, opts)) {
        bool pure = true;
        for (const auto& t : g.terms())
            for (int i : kill)
                if (t.mono.exp(i)) pure = false;
        if (pure) out.push_back(g);
    }
    return out;
}

PolyIdeal ideal_sum(const PolyIdeal& a, const PolyIdeal& b) {
    std::vector<Polynomial> gens = a.gens();
    for (const auto& g : b.gens()) gens.push_back(g);
    return PolyIdeal(a.ring(), std::move(gens));
}

PolyIdeal ideal_product(const PolyIdeal& a, const PolyIdeal& b) {
    check_same_ring(a.ring(), b.ring());
    if (a.is_zero_ideal() || b.is_zero_ideal()) return PolyIdeal::zero(a.ring());
    std::vector<Polynomial> gens;
    for (const auto& f : a.gens())
        for (const auto& g : b.gens()) gens.push_back(f * g);
    return PolyIdeal(a.ring(), std::move(gens));
}

PolyIdeal ideal_power(const PolyIdeal& a, int k) {
    if (k < 0) throw Error("negative ideal power");
    PolyIdeal r(a.ring(), {Polynomial::constant(a.ring(), a.ring()->cone())});
    for (int i = 0; i < k; ++i) r = ideal_product(r, a);
    return r;
}

namespace {

std::string fresh_var_name(const RingPtr& ring, const std::string& base) {
    if (ring->var_index(base) < 0) return base;
    for (int i = 0;; ++i) {
        std::string cand = base + std::to_string(i);
        if (ring->var_index(cand) < 0) return cand;
    }
}

}  // namespace

PolyIdeal intersect(const PolyIdeal& a, const PolyIdeal& b, const GBOptions& opts) {
    check_same_ring(a.ring(), b.ring());
    const RingPtr& ring = a.ring();
    if (a.is_zero_ideal() || b.is_zero_ideal()) return PolyIdeal::zero(ring);
    std::string tname = fresh_var_name(ring, "t");
    RingPtr ext = ring_with_front_vars(ring, {tname});
    std::vector<int> up(ring->nvars());
    for (int i = 0; i < ring->nvars(); ++i) up[i] = i + 1;
    Polynomial t = Polynomial::variable(ext, 0);
    Polynomial one = Polynomial::constant(ext, Coeff::one(ext->field()));
    std::vector<Polynomial> gens;
    for (const auto& f : a.gens()) gens.push_back(t * map_vars(f, ext, up));
    for (const auto& g : b.gens()) gens.push_back((one - t) * map_vars(g, ext, up));
    PolyIdeal graph(ext, std::move(gens));
    std::vector<int> down(ext->nvars(), -1);
    for (int i = 0; i < ring->nvars(); ++i) down[i + 1] = i;
    std::vector<Polynomial> out;
    for (const auto& g : eliminate(graph, {0}, opts)) out.push_back(map_vars(g, ring, down));
    return PolyIdeal(ring, std::move(out));
}

PolyIdeal colon(const PolyIdeal& a, const Polynomial& f, const GBOptions& opts) {
    if (f.is_zero()) throw Error("colon by zero polynomial");
    PolyIdeal principal(a.ring(), {f});
    PolyIdeal cap = intersect(a, principal, opts);
    std::vector<Polynomial> gens;
    for (const auto& g : cap.gens()) gens.push_back(exact_divide(g, f));
    return PolyIdeal(a.ring(), std::move(gens));
}

PolyIdeal colon_ideal(const PolyIdeal& a, const PolyIdeal& b, const GBOptions& opts) {
    if (b.is_zero_ideal()) throw Error("colon by zero ideal");
    bool first = true;
    PolyIdeal acc;
    for (const auto& g : b.gens()) {
        PolyIdeal c = colon(a, g, opts);
        acc = first ? c : intersect(acc, c, opts);
        first = false;
    }
    return acc;
}

PolyIdeal saturate(const PolyIdeal& a, const PolyIdeal& b, const GBOptions& opts) {
    PolyIdeal cur = a;
    while (true) {
        PolyIdeal next = colon_ideal(cur, b, opts);
        if (ideal_equal(next, cur, opts)) return cur;
        cur = next;
    }
}

PolyIdeal kernel_of_map(const RingPtr& source, const std::vector<Polynomial>& images,
                        const GBOptions& opts) {
    if (static_cast<int>(images.size()) != source->nvars())
        throw Error("one image per source variable required");
    if (images.empty()) return PolyIdeal::zero(source);
    RingPtr target = images.front().ring();
    // ambient ring: target vars first (to be eliminated), then source vars
    std::vector<std::string> names;
    for (const auto& v : target->var_names()) names.push_back(v);
    for (const auto& v : source->var_names()) {
        if (target->var_index(v) >= 0) throw Error("source and target variable names overlap");
        names.push_back(v);
    }
    RingPtr amb = Ring::make(names, source->field());
    std::vector<int> up_t(target->nvars()), up_s(source->nvars());
    for (int i = 0; i < target->nvars(); ++i) up_t[i] = i;
    for (int i = 0; i < source->nvars(); ++i) up_s[i] = target->nvars() + i;
    std::vector<Polynomial> gens;
    for (int i = 0; i < source->nvars(); ++i) {
        Polynomial z = Polynomial::variable(amb, up_s[i]);
        gens.push_back(z - map_vars(images[i], amb, up_t));
    }
    PolyIdeal graph(amb, std::move(gens));
    std::vector<int> kill;
    for (int i = 0; i < target->nvars(); ++i) kill.push_back(i);
    std::vector<int> down(amb->nvars(), -1);
    for (int i = 0; i < source->nvars(); ++i) down[up_s[i]] = i;
    std::vector<Polynomial> out;
    for (const auto& g : eliminate(graph, kill, opts)) out.push_back(map_vars(g, source, down));
    return PolyIdeal(source, std::move(out));
}

PolyIdeal toric_kernel(const RingPtr& source, const std::vector<Monomial>& images,
                       const RingPtr& target, const GBOptions& opts) {
    int m = static_cast<int>(images.size());
    if (m != source->nvars()) throw Error("one image per source variable required");
    int n = target->nvars();
    // integer kernel of the n x m exponent matrix via Hermite reduction of
    // the transpose with transformation tracking
    std::vector<std::vector<mpz_class>> h(m, std::vector<mpz_class>(n));
    std::vector<std::vector<mpz_class>> u(m, std::vector<mpz_class>(m, 0));
    for (int r = 0; r < m; ++r) {
        u[r][r] = 1;
        for (int c = 0; c < n; ++c) h[r][c] = images[r].exp(c);
    }
    int row = 0;
    for (int col = 0; col < n && row < m; ++col) {
        while (true) {
            int piv = -1;
            for (int r = row; r < m; ++r)
                if (h[r][col] != 0 && (piv < 0 || abs(h[r][col]) < abs(h[piv][col]))) piv = r;
            if (piv < 0) break;
            std::swap(h[piv], h[row]);
            std::swap(u[piv], u[row]);
            bool clean = true;
            for (int r = row + 1; r < m; ++r) {
                if (h[r][col] == 0) continue;
                mpz_class q = h[r][col] / h[row][col];
                for (int c = 0; c < n; ++c) h[r][c] -= q * h[row][c];
                for (int c = 0; c < m; ++c) u[r][c] -= q * u[row][c];
                if (h[r][col] != 0) clean = false;
            }
            if (clean) {
                ++row;
                break;
            }
        }
    }
    // rows `row..m-1` of u form a lattice basis of the kernel
    std::vector<Polynomial> gens;
    Coeff one = Coeff::one(source->field());
    for (int r = row; r < m; ++r) {
        std::vector<int> plus(m, 0), minus(m, 0);
        for (int c = 0; c < m; ++c) {
            long v = u[r][c].get_si();
            if (v > 0)
                plus[c] = static_cast<int>(v);
            else if (v < 0)
                minus[c] = static_cast<int>(-v);
        }
        Polynomial b = Polynomial::monomial(source, Monomial(plus), one) -
                       Polynomial::monomial(source, Monomial(minus), one);
        if (!b.is_zero()) gens.push_back(b);
    }
    PolyIdeal lattice(source, std::move(gens));
    // saturate by the product of all source variables
    std::vector<int> all(m, 1);
    Polynomial prod = Polynomial::monomial(source, Monomial(all), one);
    PolyIdeal cur = lattice;
    while (true) {
        PolyIdeal next = colon(cur, prod, opts);
        if (ideal_equal(next, cur, opts)) return cur;
        cur = next;
    }
}

}  // namespace linprod
