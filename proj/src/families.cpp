#include "linprod/families.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "linprod/linalg.hpp"
#include "linprod/linres.hpp"

namespace linprod {

// ---- LinearIdeal ----

LinearIdeal::LinearIdeal(RingPtr ring, const std::vector<Polynomial>& forms)
    : ring_(std::move(ring)) {
    int n = ring_->nvars();
    for (const auto& f : forms) {
        if (f.is_zero()) continue;
        std::vector<Coeff> row(n, ring_->czero());
        for (const auto& t : f.terms()) {
            if (t.mono.degree() != 1) throw Error("not a linear form: " + f.str());
            for (int i = 0; i < n; ++i)
                if (t.mono.exp(i)) row[i] = t.coeff;
        }
        rows_.push_back(std::move(row));
    }
    dense_rref(rows_);
}

LinearIdeal LinearIdeal::from_rows(RingPtr ring, std::vector<std::vector<Coeff>> rows) {
    LinearIdeal p;
    p.ring_ = std::move(ring);
    p.rows_ = std::move(rows);
    dense_rref(p.rows_);
    return p;
}

std::vector<Polynomial> LinearIdeal::forms() const {
    std::vector<Polynomial> out;
    for (const auto& row : rows_) {
        std::vector<Term> terms;
        for (int i = 0; i < ring_->nvars(); ++i)
            if (!row[i].is_zero()) terms.push_back({Monomial::unit_of(ring_->nvars(), i), row[i]});
        out.push_back(Polynomial(ring_, std::move(terms)));
    }
    return out;
}

PolyIdeal LinearIdeal::to_poly_ideal() const { return PolyIdeal(ring_, forms()); }

PolyIdeal LinearIdeal::power_ideal(int k) const {
    if (k == 0) return PolyIdeal(ring_, {Polynomial::constant(ring_, ring_->cone())});
    std::vector<Polynomial> basis = forms();
    std::vector<Polynomial> cur = basis;
    for (int i = 1; i < k; ++i) {
        std::vector<Polynomial> next;
        for (const auto& f : cur)
            for (const auto& g : basis) next.push_back(f * g);
        cur = std::move(next);
    }
    return PolyIdeal(ring_, std::move(cur));
}

bool LinearIdeal::contains(const LinearIdeal& other) const {
    IncrementalSpan span;
    auto to_sparse = [](const std::vector<Coeff>& row) {
        SparseVec v;
        for (int i = 0; i < static_cast<int>(row.size()); ++i)
            if (!row[i].is_zero()) v.push_back({i, row[i]});
        return v;
    };
    for (const auto& row : rows_) span.add(to_sparse(row));
    for (const auto& row : other.rows_)
        if (!span.contains(to_sparse(row))) return false;
    return true;
}

LinearIdeal LinearIdeal::sum(const LinearIdeal& other) const {
    std::vector<std::vector<Coeff>> rows = rows_;
    for (const auto& r : other.rows_) rows.push_back(r);
    return from_rows(ring_, std::move(rows));
}

bool LinearIdeal::operator<(const LinearIdeal& o) const {
    if (rows_.size() != o.rows_.size()) return rows_.size() < o.rows_.size();
    for (std::size_t r = 0; r < rows_.size(); ++r)
        for (std::size_t c = 0; c < rows_[r].size(); ++c) {
            const mpq_class &a = rows_[r][c].value(), &b = o.rows_[r][c].value();
            if (a != b) return a < b;
        }
    return false;
}

PolyIdeal linforms_product(const std::vector<LinearIdeal>& ps) {
    if (ps.empty()) throw Error("empty factor list");
    const RingPtr& ring = ps.front().ring();
    std::vector<Polynomial> cur = {Polynomial::constant(ring, ring->cone())};
    for (const auto& p : ps) {
        if (p.rank() == 0) throw Error("zero ideal among the factors");
        std::vector<Polynomial> next;
        for (const auto& f : cur)
            for (const auto& g : p.forms()) next.push_back(f * g);
        cur = std::move(next);
    }
    return PolyIdeal(ring, std::move(cur));
}

int linforms_vp(const PolyIdeal& product, const LinearIdeal& p, int kmax,
                const GBOptions& opts) {
    int v = 0;
    for (int k = 1; k <= kmax; ++k) {
        PolyIdeal pk = p.power_ideal(k);
        if (!pk.contains_ideal(product, opts)) break;
        v = k;
    }
    return v;
}

LinformsDecomposition linforms_decompose(const std::vector<LinearIdeal>& ps,
                                         const GBOptions& opts) {
    LinformsDecomposition out;
    int w = static_cast<int>(ps.size());
    PolyIdeal product = linforms_product(ps);
    std::map<LinearIdeal, std::vector<int>> primes;  // P_A with the first A found
    for (int mask = 1; mask < (1 << w); ++mask) {
        LinearIdeal pa;
        std::vector<int> a;
        bool first = true;
        for (int i = 0; i < w; ++i) {
            if (!(mask & (1 << i))) continue;
            a.push_back(i);
            pa = first ? ps[i] : pa.sum(ps[i]);
            first = false;
        }
        if (!primes.count(pa)) primes.emplace(pa, a);
    }
    const RingPtr& ring = ps.front().ring();
    PolyIdeal inter(ring, {Polynomial::constant(ring, ring->cone())});
    for (const auto& [prime, a] : primes) {
        int v = linforms_vp(product, prime, w, opts);
        if (v <= 0) continue;
        out.components.push_back({prime, v, a});
        inter = intersect(inter, prime.power_ideal(v), opts);
    }
    out.equals_product = ideal_equal(inter, product, opts);
    return out;
}

bool PGraph::connected() const {
    if (vertices.empty()) return true;
    std::set<int> seen{vertices.front()};
    bool grew = true;
    while (grew) {
        grew = false;
        for (const auto& [a, b] : edges) {
            if (seen.count(a) && !seen.count(b)) seen.insert(b), grew = true;
            if (seen.count(b) && !seen.count(a)) seen.insert(a), grew = true;
        }
    }
    return seen.size() == vertices.size();
}

PGraph gp_graph(const std::vector<LinearIdeal>& ps, const LinearIdeal& p) {
    PGraph g;
    for (int i = 0; i < static_cast<int>(ps.size()); ++i)
        if (p.contains(ps[i])) g.vertices.push_back(i);
    for (std::size_t a = 0; a < g.vertices.size(); ++a) {
        for (std::size_t b = a + 1; b < g.vertices.size(); ++b) {
            int i = g.vertices[a], j = g.vertices[b];
            int inter_rank = ps[i].rank() + ps[j].rank() - ps[i].sum(ps[j]).rank();
            if (inter_rank >= 1) g.edges.push_back({i, j});
        }
    }
    return g;
}

namespace {

std::vector<std::vector<Coeff>> invert_matrix(std::vector<std::vector<Coeff>> m,
                                              const FieldSpec& field) {
    int n = static_cast<int>(m.size());
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m[i].push_back(Coeff(i == j ? 1 : 0, field));
    }
    int rank = dense_rref(m);
    if (rank != n) throw Error("matrix not invertible");
    std::vector<std::vector<Coeff>> inv(n);
    for (int i = 0; i < n; ++i)
        inv[i] = std::vector<Coeff>(m[i].begin() + n, m[i].end());
    return inv;
}

// substitute x_j -> sum_k M[j][k] * y_k
Polynomial substitute_linear(const Polynomial& f, const RingPtr& target,
                             const std::vector<std::vector<Coeff>>& m) {
    Polynomial out = Polynomial::zero(target);
    for (const auto& t : f.terms()) {
        Polynomial prod = Polynomial::constant(target, t.coeff);
        for (int j = 0; j < t.mono.nvars(); ++j) {
            for (int e = 0; e < t.mono.exp(j); ++e) {
                std::vector<Term> lin;
                for (int k = 0; k < target->nvars(); ++k)
                    if (!m[j][k].is_zero())
                        lin.push_back({Monomial::unit_of(target->nvars(), k), m[j][k]});
                prod *= Polynomial(target, std::move(lin));
            }
        }
        out += prod;
    }
    return out;
}

}  // namespace

namespace {

// localization at P: keep the factors inside P, change coordinates so that
// P is spanned by the first rank(P) variables, and restrict
struct Localization {
    RingPtr sub;                       // K[y_1..y_m]
    std::vector<LinearIdeal> factors;  // the kept factors in sub coordinates
    PolyIdeal product;                 // their product
    PolyIdeal max_ideal;               // (y_1..y_m)
    bool empty = false;
};

Localization localize_at(const std::vector<LinearIdeal>& ps, const LinearIdeal& p) {
    Localization loc;
    const RingPtr& ring = ps.front().ring();
    int n = ring->nvars();
    int m = p.rank();
    FieldSpec field = ring->field();
    std::vector<LinearIdeal> kept;
    for (const auto& q : ps)
        if (p.contains(q)) kept.push_back(q);
    if (kept.empty()) {
        loc.empty = true;
        return loc;
    }
    std::vector<std::vector<Coeff>> t = p.rows();
    std::vector<bool> pivot(n, false);
    for (const auto& row : p.rows()) {
        for (int i = 0; i < n; ++i)
            if (!row[i].is_zero()) {
                pivot[i] = true;
                break;
            }
    }
    for (int i = 0; i < n; ++i) {
        if (pivot[i]) continue;
        std::vector<Coeff> unit(n, Coeff(0, field));
        unit[i] = Coeff(1, field);
        t.push_back(std::move(unit));
    }
    std::vector<std::vector<Coeff>> tinv = invert_matrix(t, field);
    std::vector<std::string> ynames;
    for (int i = 0; i < m; ++i) ynames.push_back("y" + std::to_string(i + 1));
    loc.sub = Ring::make(ynames, field);
    std::vector<int> down(n, -1);
    for (int i = 0; i < m; ++i) down[i] = i;
    std::vector<Polynomial> cur = {Polynomial::constant(loc.sub, Coeff::one(field))};
    for (const auto& q : kept) {
        std::vector<Polynomial> mapped_forms;
        for (const auto& g : q.forms())
            mapped_forms.push_back(map_vars(substitute_linear(g, ring, tinv), loc.sub, down));
        loc.factors.emplace_back(loc.sub, mapped_forms);
        std::vector<Polynomial> next;
        for (const auto& f : cur)
            for (const auto& g : mapped_forms) next.push_back(f * g);
        cur = std::move(next);
    }
    loc.product = PolyIdeal(loc.sub, std::move(cur));
    std::vector<Polynomial> mg;
    for (int i = 0; i < m; ++i) mg.push_back(Polynomial::variable(loc.sub, i));
    loc.max_ideal = PolyIdeal(loc.sub, std::move(mg));
    return loc;
}

}  // namespace

bool linforms_is_associated(const std::vector<LinearIdeal>& ps, const LinearIdeal& p,
                            const GBOptions& opts) {
    Localization loc = localize_at(ps, p);
    if (loc.empty) return false;
    PolyIdeal quot = colon_ideal(loc.product, loc.max_ideal, opts);
    return !ideal_equal(quot, loc.product, opts);
}

std::optional<bool> linforms_witness_check(const std::vector<LinearIdeal>& ps,
                                           const LinearIdeal& p, const GBOptions& opts) {
    Localization loc = localize_at(ps, p);
    if (loc.empty) return std::nullopt;
    // need P to be the sum of the kept factors and G_P connected
    LinearIdeal sum = loc.factors.front();
    for (std::size_t i = 1; i < loc.factors.size(); ++i) sum = sum.sum(loc.factors[i]);
    if (sum.rank() != loc.sub->nvars()) return std::nullopt;
    PGraph g = gp_graph(loc.factors, sum);
    if (!g.connected() || g.vertices.empty()) return std::nullopt;
    // spanning tree and one linear form per tree edge
    int nv = static_cast<int>(loc.factors.size());
    std::vector<int> comp(nv);
    for (int i = 0; i < nv; ++i) comp[i] = i;
    std::function<int(int)> find = [&](int x) { return comp[x] == x ? x : comp[x] = find(comp[x]); };
    Polynomial witness = Polynomial::constant(loc.sub, Coeff::one(loc.sub->field()));
    for (const auto& [a, b] : g.edges) {
        if (find(a) == find(b)) continue;
        comp[find(a)] = find(b);
        // a nonzero linear form in the intersection of the two subspaces
        KernelAccumulator ker(loc.sub->nvars());
        auto feed = [&](const LinearIdeal& q) {
            for (const auto& row : q.rows()) {
                SparseVec col;
                for (int i = 0; i < loc.sub->nvars(); ++i)
                    if (!row[i].is_zero()) col.push_back({i, row[i]});
                ker.add_column(col, loc.sub->field());
            }
        };
        feed(loc.factors[a]);
        feed(loc.factors[b]);
        if (ker.kernel().empty()) return std::nullopt;
        const SparseVec& combo = ker.kernel().front();
        // rebuild the common form from the A-side of the combination
        Polynomial form = Polynomial::zero(loc.sub);
        int ra = loc.factors[a].rank();
        for (const auto& [idx, c] : combo) {
            if (idx >= ra) continue;
            std::vector<Term> ts;
            for (int i = 0; i < loc.sub->nvars(); ++i) {
                const Coeff& x = loc.factors[a].rows()[idx][i];
                if (!x.is_zero()) ts.push_back({Monomial::unit_of(loc.sub->nvars(), i), x});
            }
            form += Polynomial(loc.sub, std::move(ts)).mul_scalar(c);
        }
        if (form.is_zero()) return std::nullopt;
        witness *= form;
    }
    // I : F = P with F the tree product of degree (#factors - 1)
    PolyIdeal quotient = colon(loc.product, witness, opts);
    return ideal_equal(quotient, loc.max_ideal, opts);
}

GpTestReport gp_tests(const std::vector<LinearIdeal>& ps, const LinearIdeal& p,
                      const GBOptions& opts) {
    GpTestReport rep;
    PGraph g = gp_graph(ps, p);
    rep.gp_connected = g.connected() && !g.vertices.empty();
    rep.is_associated = linforms_is_associated(ps, p, opts);
    // split criterion: a bipartition of the kept factors into two subspaces
    // with trivial pairwise intersection
    int nv = static_cast<int>(g.vertices.size());
    rep.split_criterion = false;
    for (int mask = 1; mask + 1 < (1 << nv); ++mask) {
        LinearIdeal p1, p2;
        bool f1 = true, f2 = true;
        for (int i = 0; i < nv; ++i) {
            const LinearIdeal& q = ps[g.vertices[i]];
            if (mask & (1 << i)) {
                p1 = f1 ? q : p1.sum(q);
                f1 = false;
            } else {
                p2 = f2 ? q : p2.sum(q);
                f2 = false;
            }
        }
        if (f1 || f2) continue;
        if (p1.sum(p2) != p) continue;
        if (p1.rank() + p2.rank() - p1.sum(p2).rank() == 0) {
            rep.split_criterion = true;
            break;
        }
    }
    if (rep.gp_connected && !rep.is_associated) rep.consistent = false;
    if (rep.split_criterion && rep.is_associated) rep.consistent = false;
    return rep;
}

// ---- polymatroidal ----

int polymatroid_vp(const MonomialIdeal& ideal, const MonomialPrime& p) {
    if (!is_polymatroidal(ideal)) throw Error("not a polymatroidal ideal");
    MonomialIdeal local = restrict_to_prime(ideal, p);
    if (local.is_unit()) return 0;
    return regularity(local);
}

PolymatroidDecomposition polymatroid_decompose(const MonomialIdeal& ideal) {
    if (!is_polymatroidal(ideal)) throw Error("not a polymatroidal ideal");
    PolymatroidDecomposition out;
    const RingPtr& ring = ideal.ring();
    int n = ring->nvars();
    MonomialIdeal inter = MonomialIdeal::unit(ring);
    bool first = true;
    for (int mask = 1; mask < (1 << n); ++mask) {
        MonomialPrime prime;
        for (int i = 0; i < n; ++i)
            if (mask & (1 << i)) prime.push_back(i);
        int v = polymatroid_vp(ideal, prime);
        if (v <= 0) continue;
        out.components.push_back({prime, v});
        MonomialIdeal power = [&] {
            std::vector<Monomial> vars;
            for (int i : prime) vars.push_back(Monomial::unit_of(n, i));
            return mi_power(MonomialIdeal(ring, vars), v);
        }();
        inter = first ? power : mi_intersect(inter, power);
        first = false;
    }
    out.equals_ideal = !first && inter == ideal;
    // irredundant sublist by removal
    std::vector<PolymatroidComponent> kept = out.components;
    for (std::size_t i = 0; i < kept.size();) {
        MonomialIdeal rest = MonomialIdeal::unit(ring);
        bool f = true;
        for (std::size_t j = 0; j < kept.size(); ++j) {
            if (j == i) continue;
            std::vector<Monomial> vars;
            for (int v : kept[j].prime) vars.push_back(Monomial::unit_of(n, v));
            MonomialIdeal pw = mi_power(MonomialIdeal(ring, vars), kept[j].exponent);
            rest = f ? pw : mi_intersect(rest, pw);
            f = false;
        }
        if (!f && rest == ideal) {
            kept.erase(kept.begin() + static_cast<long>(i));
        } else {
            ++i;
        }
    }
    out.irredundant = std::move(kept);
    return out;
}

AssChain polymatroid_ass_chain(const MonomialIdeal& ideal, int kmax) {
    AssChain chain;
    for (int k = 1; k <= kmax; ++k)
        chain.ass_per_power.push_back(associated_primes(mi_power(ideal, k)));
    chain.chain_inclusions = true;
    chain.constant = true;
    for (std::size_t k = 0; k + 1 < chain.ass_per_power.size(); ++k) {
        const auto& a = chain.ass_per_power[k];
        const auto& b = chain.ass_per_power[k + 1];
        for (const auto& p : a)
            if (std::find(b.begin(), b.end(), p) == b.end()) chain.chain_inclusions = false;
        if (a != b) chain.constant = false;
    }
    return chain;
}

// ---- northeast ----

void NortheastSpec::validate() const {
    if (n < 1) throw Error("matrix size must be positive");
    for (const auto& [t, a] : pairs) {
        if (t < 1 || a < 1 || t + a > n + 1)
            throw Error("northeast pair out of range: (" + std::to_string(t) + "," +
                        std::to_string(a) + ") with n=" + std::to_string(n));
    }
}

PolyIdeal ne_minor_ideal(const RingPtr& ring, int t, int a) {
    const auto& layout = ring->layout();
    if (!layout) throw Error("northeast ideals need a matrix ring");
    int n = layout->cols;
    std::vector<Polynomial> minors;
    // column subsets a <= b_1 < ... < b_t <= n (1-based)
    std::vector<int> cols(t);
    std::function<void(int, int)> rec = [&](int pos, int start) {
        if (pos == t) {
            // Leibniz expansion over permutations of rows 1..t
            std::vector<int> perm(t);
            for (int i = 0; i < t; ++i) perm[i] = i;
            Polynomial det = Polynomial::zero(ring);
            do {
                int sign = 1;
                for (int i = 0; i < t; ++i)
                    for (int j = i + 1; j < t; ++j)
                        if (perm[i] > perm[j]) sign = -sign;
                Monomial m(ring->nvars());
                for (int i = 0; i < t; ++i)
                    m = m * Monomial::unit_of(ring->nvars(), ring->matrix_var(i, cols[perm[i]]));
                det += Polynomial::monomial(ring, m, Coeff(sign, ring->field()));
            } while (std::next_permutation(perm.begin(), perm.end()));
            minors.push_back(det);
            return;
        }
        for (int c = start; c < n; ++c) {
            cols[pos] = c;
            rec(pos + 1, c + 1);
        }
    };
    rec(0, a - 1);
    return PolyIdeal(ring, std::move(minors));
}

MonomialIdeal ne_diagonal_ideal(const RingPtr& ring, int t, int a) {
    const auto& layout = ring->layout();
    if (!layout) throw Error("northeast ideals need a matrix ring");
    int n = layout->cols;
    std::vector<Monomial> gens;
    std::vector<int> cols(t);
    std::function<void(int, int)> rec = [&](int pos, int start) {
        if (pos == t) {
            Monomial m(ring->nvars());
            for (int i = 0; i < t; ++i)
                m = m * Monomial::unit_of(ring->nvars(), ring->matrix_var(i, cols[i]));
            gens.push_back(m);
            return;
        }
        for (int c = start; c < n; ++c) {
            cols[pos] = c;
            rec(pos + 1, c + 1);
        }
    };
    rec(0, a - 1);
    return MonomialIdeal(ring, std::move(gens));
}

int ne_exponent(const NortheastSpec& spec, int u, int b) {
    int e = 0;
    for (const auto& [t, a] : spec.pairs)
        if (b <= a && u <= t) ++e;
    return e;
}

NeDecomposition ne_decompose(const NortheastSpec& spec, const GBOptions& opts) {
    spec.validate();
    NeDecomposition out;
    RingPtr ring = spec.matrix_ring();
    // products
    PolyIdeal iprod(ring, {Polynomial::constant(ring, ring->cone())});
    MonomialIdeal jprod = MonomialIdeal::unit(ring);
    for (const auto& [t, a] : spec.pairs) {
        iprod = ideal_product(iprod, ne_minor_ideal(ring, t, a));
        jprod = mi_product(jprod, ne_diagonal_ideal(ring, t, a));
    }
    // intersections over valid (u, b)
    PolyIdeal iinter(ring, {Polynomial::constant(ring, ring->cone())});
    MonomialIdeal jinter = MonomialIdeal::unit(ring);
    for (int u = 1; u <= spec.n; ++u) {
        for (int b = 1; u + b <= spec.n + 1; ++b) {
            int e = ne_exponent(spec, u, b);
            if (e <= 0) continue;
            out.exponents[{u, b}] = e;
            iinter = intersect(iinter, ideal_power(ne_minor_ideal(ring, u, b), e), opts);
            jinter = mi_intersect(jinter, mi_power(ne_diagonal_ideal(ring, u, b), e));
        }
    }
    out.minor_side_equal = ideal_equal(iinter, iprod, opts);
    out.diagonal_side_equal = jinter == jprod;
    return out;
}

NeIrredundant ne_irredundant(const NortheastSpec& spec, const GBOptions& opts) {
    spec.validate();
    NeIrredundant out;
    RingPtr ring = spec.matrix_ring();
    std::set<std::pair<int, int>> sset(spec.pairs.begin(), spec.pairs.end());
    // Y: points (t,a) not in S with witnesses (t,b),(u,a) in S, t<u, a<b
    out.proviso = true;
    std::set<std::pair<int, int>> yset;
    for (int t = 1; t <= spec.n; ++t) {
        for (int a = 1; a <= spec.n; ++a) {
            if (sset.count({t, a})) continue;
            bool member = false, witness_ok = false;
            for (int u = t + 1; u <= spec.n; ++u) {
                for (int b = a + 1; b <= spec.n; ++b) {
                    if (sset.count({t, b}) && sset.count({u, a})) {
                        member = true;
                        if (u + b <= spec.n + 1) witness_ok = true;
                    }
                }
            }
            if (member) {
                yset.insert({t, a});
                if (!witness_ok) out.proviso = false;
            }
        }
    }
    out.extra.assign(yset.begin(), yset.end());
    // product and refined decomposition over S ∪ Y
    PolyIdeal iprod(ring, {Polynomial::constant(ring, ring->cone())});
    for (const auto& [t, a] : spec.pairs) iprod = ideal_product(iprod, ne_minor_ideal(ring, t, a));
    std::set<std::pair<int, int>> comps = sset;
    comps.insert(yset.begin(), yset.end());
    std::vector<PolyIdeal> powers;
    std::vector<std::pair<int, int>> labels;
    for (const auto& [v, c] : comps) {
        int e = ne_exponent(spec, v, c);
        if (e <= 0) continue;
        powers.push_back(ideal_power(ne_minor_ideal(ring, v, c), e));
        labels.push_back({v, c});
    }
    PolyIdeal inter(ring, {Polynomial::constant(ring, ring->cone())});
    for (const auto& p : powers) inter = intersect(inter, p, opts);
    out.equals_ideal = ideal_equal(inter, iprod, opts);
    // irredundancy by removal; the surviving primes are the associated ones
    out.irredundant = true;
    std::vector<bool> kept(powers.size(), true);
    for (std::size_t skip = 0; skip < powers.size(); ++skip) {
        PolyIdeal rest(ring, {Polynomial::constant(ring, ring->cone())});
        for (std::size_t j = 0; j < powers.size(); ++j)
            if (j != skip && kept[j]) rest = intersect(rest, powers[j], opts);
        if (ideal_equal(rest, iprod, opts)) {
            out.irredundant = false;
            kept[skip] = false;
        }
    }
    for (std::size_t j = 0; j < powers.size(); ++j)
        if (kept[j]) out.associated.push_back(labels[j]);
    return out;
}

NeJPower ne_jpower_decompose(int u, int b, int k, int n) {
    NeJPower out;
    RingPtr ring = Ring::matrix(n, n);
    MonomialIdeal j = ne_diagonal_ideal(ring, u, b);
    for (const auto& comp : primary_decomposition(j)) out.facets.push_back(comp.prime);
    MonomialIdeal jk = mi_power(j, k);
    MonomialIdeal inter = MonomialIdeal::unit(ring);
    bool first = true;
    for (const auto& prime : out.facets) {
        std::vector<Monomial> vars;
        for (int i : prime) vars.push_back(Monomial::unit_of(ring->nvars(), i));
        MonomialIdeal pw = mi_power(MonomialIdeal(ring, vars), k);
        inter = first ? pw : mi_intersect(inter, pw);
        first = false;
    }
    out.equal = !first && inter == jk;
    return out;
}

}  // namespace linprod
