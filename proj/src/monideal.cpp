#include "linprod/monideal.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "linprod/linalg.hpp"
#include "linprod/parse.hpp"

namespace linprod {

namespace {

std::vector<Monomial> minimalize_monomials(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a < b;
    });
    std::vector<Monomial> out;
    for (const auto& m : gens) {
        bool divisible = false;
        for (const auto& g : out)
            if (g.divides(m)) {
                divisible = true;
                break;
            }
        if (!divisible) out.push_back(m);
    }
    return out;
}

}  // namespace

MonomialIdeal::MonomialIdeal(RingPtr ring, std::vector<Monomial> gens) : ring_(std::move(ring)) {
    gens_ = minimalize_monomials(std::move(gens));
    const MonomialOrder& ord = ring_->default_order();
    std::sort(gens_.begin(), gens_.end(),
              [&](const Monomial& a, const Monomial& b) { return ord.less(a, b); });
}

bool MonomialIdeal::contains(const Monomial& m) const {
    for (const auto& g : gens_)
        if (g.divides(m)) return true;
    return false;
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
    for (const auto& g : other.gens_)
        if (!contains(g)) return false;
    return true;
}

int MonomialIdeal::equigenerated_degree() const {
    if (gens_.empty()) return -1;
    int d = gens_[0].degree();
    for (const auto& g : gens_)
        if (g.degree() != d) return -1;
    return d;
}

Monomial MonomialIdeal::lcm_of_gens() const {
    Monomial l(ring_->nvars());
    for (const auto& g : gens_) l = lcm(l, g);
    return l;
}

PolyIdeal MonomialIdeal::to_poly_ideal() const {
    std::vector<Polynomial> gens;
    for (const auto& m : gens_) gens.push_back(Polynomial::monomial(ring_, m, ring_->cone()));
    return PolyIdeal(ring_, std::move(gens));
}

std::string MonomialIdeal::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (i) s += ", ";
        s += Polynomial::monomial(ring_, gens_[i], ring_->cone()).str();
    }
    return s + ")";
}

MonomialIdeal mi_sum(const MonomialIdeal& a, const MonomialIdeal& b) {
    check_same_ring(a.ring(), b.ring());
    std::vector<Monomial> gens = a.gens();
    for (const auto& g : b.gens()) gens.push_back(g);
    return MonomialIdeal(a.ring(), std::move(gens));
}

MonomialIdeal mi_product(const MonomialIdeal& a, const MonomialIdeal& b) {
    check_same_ring(a.ring(), b.ring());
    std::vector<Monomial> gens;
    for (const auto& f : a.gens())
        for (const auto& g : b.gens()) gens.push_back(f * g);
    return MonomialIdeal(a.ring(), std::move(gens));
}

MonomialIdeal mi_power(const MonomialIdeal& a, int k) {
    if (k < 0) throw Error("negative ideal power");
    MonomialIdeal r = MonomialIdeal::unit(a.ring());
    for (int i = 0; i < k; ++i) r = mi_product(r, a);
    return r;
}

MonomialIdeal mi_intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
    check_same_ring(a.ring(), b.ring());
    std::vector<Monomial> gens;
    for (const auto& f : a.gens())
        for (const auto& g : b.gens()) gens.push_back(lcm(f, g));
    return MonomialIdeal(a.ring(), std::move(gens));
}

MonomialIdeal mi_colon(const MonomialIdeal& a, const Monomial& m) {
    std::vector<Monomial> gens;
    for (const auto& g : a.gens()) gens.push_back(g / gcd(g, m));
    return MonomialIdeal(a.ring(), std::move(gens));
}

MonomialIdeal mi_colon_ideal(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (b.is_zero()) throw Error("colon by zero ideal");
    MonomialIdeal acc;
    bool first = true;
    for (const auto& m : b.gens()) {
        MonomialIdeal c = mi_colon(a, m);
        acc = first ? c : mi_intersect(acc, c);
        first = false;
    }
    return acc;
}

MonomialIdeal mi_saturate(const MonomialIdeal& a, const MonomialIdeal& b) {
    MonomialIdeal cur = a;
    while (true) {
        MonomialIdeal next = mi_colon_ideal(cur, b);
        if (next == cur) return cur;
        cur = next;
    }
}

bool is_strongly_stable(const MonomialIdeal& ideal) {
    for (const auto& m : ideal.gens()) {
        for (int j = 0; j < m.nvars(); ++j) {
            if (m.exp(j) == 0) continue;
            for (int i = 0; i < j; ++i) {
                std::vector<int> e = m.exps();
                e[j] -= 1;
                e[i] += 1;
                if (!ideal.contains(Monomial(e))) return false;
            }
        }
    }
    return true;
}

MonomialIdeal principal_borel(const RingPtr& ring, const Monomial& u) {
    MonomialIdeal r = MonomialIdeal::unit(ring);
    for (int i = 0; i < ring->nvars(); ++i) {
        if (u.exp(i) == 0) continue;
        std::vector<Monomial> vars;
        for (int j = 0; j <= i; ++j) {
            std::vector<int> e(ring->nvars(), 0);
            e[j] = 1;
            vars.push_back(Monomial(e));
        }
        r = mi_product(r, mi_power(MonomialIdeal(ring, vars), u.exp(i)));
    }
    return r;
}

bool is_polymatroidal(const MonomialIdeal& ideal) {
    if (ideal.is_zero()) return false;
    if (ideal.equigenerated_degree() < 0) return false;
    const auto& gens = ideal.gens();
    for (const auto& u : gens) {
        for (const auto& v : gens) {
            for (int i = 0; i < u.nvars(); ++i) {
                if (u.exp(i) <= v.exp(i)) continue;
                bool found = false;
                for (int j = 0; j < u.nvars() && !found; ++j) {
                    if (u.exp(j) >= v.exp(j)) continue;
                    std::vector<int> e = u.exps();
                    e[i] -= 1;
                    e[j] += 1;
                    if (ideal.contains(Monomial(e))) found = true;
                }
                if (!found) return false;
            }
        }
    }
    return true;
}

std::optional<std::vector<std::vector<int>>> transversal_presentation(const MonomialIdeal& ideal,
                                                                      int degree_cap) {
    int d = ideal.equigenerated_degree();
    if (d < 0 || d > degree_cap) return std::nullopt;
    if (d == 0) return std::vector<std::vector<int>>{};
    const RingPtr& ring = ideal.ring();
    int n = ring->nvars();
    // variables appearing in the ideal
    std::vector<int> supp;
    for (int i = 0; i < n; ++i) {
        bool occurs = false;
        for (const auto& g : ideal.gens())
            if (g.exp(i)) occurs = true;
        if (occurs) supp.push_back(i);
    }
    if (d == 1) {
        // must be exactly an ideal of variables
        for (const auto& g : ideal.gens())
            if (g.degree() != 1) return std::nullopt;
        return std::vector<std::vector<int>>{supp};
    }
    int s = static_cast<int>(supp.size());
    for (int mask = 1; mask < (1 << s); ++mask) {
        std::vector<int> vars;
        std::vector<Monomial> var_gens;
        for (int b = 0; b < s; ++b)
            if (mask & (1 << b)) {
                vars.push_back(supp[b]);
                std::vector<int> e(n, 0);
                e[supp[b]] = 1;
                var_gens.push_back(Monomial(e));
            }
        MonomialIdeal V(ring, var_gens);
        MonomialIdeal J = mi_colon_ideal(ideal, V);
        if (mi_product(V, J) == ideal) {
            auto rest = transversal_presentation(J, degree_cap);
            if (rest) {
                std::vector<std::vector<int>> out{vars};
                for (auto& r : *rest) out.push_back(std::move(r));
                return out;
            }
        }
    }
    return std::nullopt;
}

namespace {

// Exact LP feasibility: exists lambda >= 0 with sum lambda = 1 and
// sum lambda_k g_k <= a (componentwise).  Maximizes sum lambda under
// sum lambda <= 1 by a dense simplex with Bland's rule.
bool newton_member(const Monomial& a, const std::vector<Monomial>& gens) {
    int m = static_cast<int>(gens.size());
    int n = a.nvars();
    int rows = n + 1, cols = m + rows;  // slacks for each row
    std::vector<std::vector<mpq_class>> t(rows + 1, std::vector<mpq_class>(cols + 1, 0));
    // constraint rows
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < m; ++k) t[i][k] = gens[k].exp(i);
        t[i][m + i] = 1;
        t[i][cols] = a.exp(i);
    }
    for (int k = 0; k < m; ++k) t[n][k] = 1;
    t[n][m + n] = 1;
    t[n][cols] = 1;
    // objective: maximize sum lambda -> row of -1 costs
    for (int k = 0; k < m; ++k) t[rows][k] = -1;
    std::vector<int> basis(rows);
    for (int i = 0; i < rows; ++i) basis[i] = m + i;

    while (true) {
        int enter = -1;
        for (int c = 0; c < cols; ++c)
            if (t[rows][c] < 0) {
                enter = c;
                break;
            }
        if (enter < 0) break;
        int leave = -1;
        mpq_class best;
        for (int r = 0; r < rows; ++r) {
            if (t[r][enter] <= 0) continue;
            mpq_class ratio = t[r][cols] / t[r][enter];
            if (leave < 0 || ratio < best || (ratio == best && basis[r] < basis[leave])) {
                best = ratio;
                leave = r;
            }
        }
        if (leave < 0) break;  // unbounded; cannot happen with sum lambda <= 1
        mpq_class piv = t[leave][enter];
        for (int c = 0; c <= cols; ++c) t[leave][c] /= piv;
        for (int r = 0; r <= rows; ++r) {
            if (r == leave || t[r][enter] == 0) continue;
            mpq_class f = t[r][enter];
            for (int c = 0; c <= cols; ++c) t[r][c] -= f * t[leave][c];
        }
        basis[leave] = enter;
    }
    return t[rows][cols] == 1;  // objective value reaches 1
}

}  // namespace

MonomialIdeal integral_closure(const MonomialIdeal& ideal, int degree_bound) {
    if (ideal.is_zero() || ideal.is_unit()) return ideal;
    const RingPtr& ring = ideal.ring();
    int n = ring->nvars();
    Monomial box = ideal.lcm_of_gens();
    int dmax = degree_bound;
    if (dmax < 0)
        for (const auto& g : ideal.gens()) dmax = std::max(dmax, g.degree());
    std::vector<Monomial> closure_gens = ideal.gens();
    // enumerate candidates a <= componentwise lcm, degree <= max generator degree
    std::vector<int> e(n, 0);
    while (true) {
        Monomial cand(e);
        if (cand.degree() > 0 && cand.degree() <= dmax && !ideal.contains(cand) &&
            newton_member(cand, ideal.gens()))
            closure_gens.push_back(cand);
        int i = 0;
        while (i < n) {
            if (++e[i] <= box.exp(i)) break;
            e[i] = 0;
            ++i;
        }
        if (i == n) break;
    }
    return MonomialIdeal(ring, std::move(closure_gens));
}

bool is_integrally_closed(const MonomialIdeal& ideal) { return integral_closure(ideal) == ideal; }

namespace {

void decompose_rec(const MonomialIdeal& ideal, std::vector<MonomialIdeal>& out) {
    if (ideal.is_unit()) return;
    const RingPtr& ring = ideal.ring();
    for (const auto& m : ideal.gens()) {
        int first_var = -1, nsupp = 0;
        for (int i = 0; i < m.nvars(); ++i)
            if (m.exp(i)) {
                ++nsupp;
                if (first_var < 0) first_var = i;
            }
        if (nsupp <= 1) continue;
        // split m = x^a * rest with coprime nontrivial parts
        std::vector<int> pure(ring->nvars(), 0);
        pure[first_var] = m.exp(first_var);
        std::vector<int> rest = m.exps();
        rest[first_var] = 0;
        std::vector<Monomial> g1 = ideal.gens(), g2 = ideal.gens();
        g1.push_back(Monomial(pure));
        g2.push_back(Monomial(rest));
        decompose_rec(MonomialIdeal(ring, g1), out);
        decompose_rec(MonomialIdeal(ring, g2), out);
        return;
    }
    out.push_back(ideal);  // every generator is a pure power: primary
}

MonomialPrime radical_of_pure_power_ideal(const MonomialIdeal& ideal) {
    std::set<int> vars;
    for (const auto& g : ideal.gens())
        for (int i = 0; i < g.nvars(); ++i)
            if (g.exp(i)) vars.insert(i);
    return MonomialPrime(vars.begin(), vars.end());
}

}  // namespace

std::vector<PrimaryComponent> primary_decomposition(const MonomialIdeal& ideal) {
    std::vector<PrimaryComponent> result;
    if (ideal.is_zero() || ideal.is_unit()) return result;
    std::vector<MonomialIdeal> parts;
    decompose_rec(ideal, parts);
    // merge components with the same radical
    std::map<MonomialPrime, MonomialIdeal> merged;
    for (const auto& c : parts) {
        MonomialPrime p = radical_of_pure_power_ideal(c);
        auto it = merged.find(p);
        if (it == merged.end())
            merged.emplace(p, c);
        else
            it->second = mi_intersect(it->second, c);
    }
    std::vector<PrimaryComponent> comps;
    for (auto& [p, c] : merged) comps.push_back({p, std::move(c)});
    // irredundancy by removal
    for (std::size_t i = 0; i < comps.size();) {
        MonomialIdeal rest;
        bool first = true;
        for (std::size_t j = 0; j < comps.size(); ++j) {
            if (j == i) continue;
            rest = first ? comps[j].component : mi_intersect(rest, comps[j].component);
            first = false;
        }
        if (!first && comps[i].component.contains(rest)) {
            comps.erase(comps.begin() + static_cast<long>(i));
        } else {
            ++i;
        }
    }
    return comps;
}

std::vector<MonomialPrime> associated_primes(const MonomialIdeal& ideal) {
    std::vector<MonomialPrime> out;
    for (const auto& c : primary_decomposition(ideal)) out.push_back(c.prime);
    std::sort(out.begin(), out.end());
    return out;
}

MonomialIdeal restrict_to_prime(const MonomialIdeal& ideal, const MonomialPrime& p) {
    std::vector<bool> in(ideal.ring()->nvars(), false);
    for (int i : p) in[i] = true;
    std::vector<Monomial> gens;
    for (const auto& g : ideal.gens()) {
        std::vector<int> e = g.exps();
        for (int i = 0; i < static_cast<int>(e.size()); ++i)
            if (!in[i]) e[i] = 0;
        gens.push_back(Monomial(e));
    }
    return MonomialIdeal(ideal.ring(), std::move(gens));
}

namespace {

using ZPoly = std::vector<mpz_class>;

ZPoly zp_add(const ZPoly& a, const ZPoly& b) {
    ZPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

ZPoly zp_shift(const ZPoly& a, int k) {
    if (a.empty()) return a;
    ZPoly r(a.size() + k, 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i + k] = a[i];
    return r;
}

// multiply by (1 - t^d)
ZPoly zp_mul_cyclotomic(const ZPoly& a, int d) {
    ZPoly s = zp_shift(a, d);
    ZPoly r(std::max(a.size(), s.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < s.size(); ++i) r[i] -= s[i];
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

ZPoly hs_numerator(const MonomialIdeal& ideal) {
    if (ideal.is_zero()) return {1};
    if (ideal.is_unit()) return {};
    const auto& gens = ideal.gens();
    bool pairwise_coprime = true;
    for (std::size_t i = 0; i < gens.size() && pairwise_coprime; ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j)
            if (!coprime(gens[i], gens[j])) {
                pairwise_coprime = false;
                break;
            }
    if (pairwise_coprime) {
        ZPoly r{1};
        for (const auto& g : gens) r = zp_mul_cyclotomic(r, g.degree());
        return r;
    }
    // pivot: variable occurring most often among generators
    int n = ideal.ring()->nvars(), best = -1, best_count = 0;
    for (int i = 0; i < n; ++i) {
        int cnt = 0;
        for (const auto& g : gens)
            if (g.exp(i)) ++cnt;
        if (cnt > best_count) {
            best_count = cnt;
            best = i;
        }
    }
    std::vector<int> ve(n, 0);
    ve[best] = 1;
    Monomial xv(ve);
    std::vector<Monomial> plus = gens;
    plus.push_back(xv);
    MonomialIdeal sum(ideal.ring(), plus);
    MonomialIdeal quot = mi_colon(ideal, xv);
    return zp_add(hs_numerator(sum), zp_shift(hs_numerator(quot), 1));
}

}  // namespace

std::pair<std::vector<mpz_class>, int> HilbertSeries::h_polynomial() const {
    ZPoly h = numerator;
    int pow = denominator_power;
    while (pow > 0 && !h.empty()) {
        // try dividing by (1 - t): exact iff h(1) == 0
        mpz_class at_one = 0;
        for (const auto& c : h) at_one += c;
        if (at_one != 0) break;
        // synthetic division: h = (1 - t) * q  =>  q_i = q_{i-1} + ... compute
        // (1-t) q = h: q_i = h_i + q_{i-1}
        ZPoly q(h.size() - 1, 0);
        mpz_class prev = 0;
        for (std::size_t i = 0; i < q.size(); ++i) {
            q[i] = h[i] + prev;
            prev = q[i];
        }
        h = std::move(q);
        while (!h.empty() && h.back() == 0) h.pop_back();
        --pow;
    }
    return {h, pow};
}

bool HilbertSeries::h_has_negative_coefficient() const {
    for (const auto& c : h_polynomial().first)
        if (c < 0) return true;
    return false;
}

mpz_class HilbertSeries::series_coefficient(int d) const {
    // numerator / (1-t)^n: coefficient of t^d
    mpz_class s = 0;
    int n = denominator_power;
    for (int i = 0; i <= d && i < static_cast<int>(numerator.size()); ++i) {
        // binom(d - i + n - 1, n - 1)
        mpz_class b = 1;
        for (int k = 0; k < n - 1; ++k) {
            b *= (d - i + n - 1 - k);
            b /= (k + 1);
        }
        if (n == 0) b = (i == d) ? 1 : 0;
        s += numerator[i] * b;
    }
    return s;
}

HilbertSeries hilbert_series(const MonomialIdeal& ideal) {
    HilbertSeries hs;
    hs.numerator = hs_numerator(ideal);
    hs.denominator_power = ideal.ring()->nvars();
    return hs;
}

BettiTable betti_upper_koszul(const MonomialIdeal& ideal) {
    BettiTable table;
    if (ideal.is_zero()) return table;
    const RingPtr& ring = ideal.ring();
    int n = ring->nvars();
    FieldSpec field = ring->field();
    // Betti degrees live on the lcm lattice of the minimal generators.
    std::set<Monomial> lattice(ideal.gens().begin(), ideal.gens().end());
    std::vector<Monomial> frontier(ideal.gens());
    while (!frontier.empty()) {
        Monomial a = frontier.back();
        frontier.pop_back();
        for (const auto& g : ideal.gens()) {
            Monomial l = lcm(a, g);
            if (lattice.insert(l).second) frontier.push_back(l);
        }
    }
    for (const Monomial& b : lattice) {
        const std::vector<int>& e = b.exps();
        {
            // supp and faces of the upper Koszul complex at b
            std::vector<int> supp;
            for (int i = 0; i < n; ++i)
                if (e[i]) supp.push_back(i);
            int s = static_cast<int>(supp.size());
            std::vector<std::vector<int>> faces_by_card(s + 1);
            for (int mask = 0; mask < (1 << s); ++mask) {
                std::vector<int> q = e;
                for (int bpos = 0; bpos < s; ++bpos)
                    if (mask & (1 << bpos)) q[supp[bpos]] -= 1;
                if (ideal.contains(Monomial(q)))
                    faces_by_card[__builtin_popcount(static_cast<unsigned>(mask))].push_back(mask);
            }
            // boundary ranks: rank_c = rank of d: C_c -> C_{c-1} (cardinalities)
            std::vector<int> rank_card(s + 2, 0);
            for (int c = 1; c <= s; ++c) {
                if (faces_by_card[c].empty() || faces_by_card[c - 1].empty()) continue;
                std::map<int, int> index;
                for (std::size_t i = 0; i < faces_by_card[c - 1].size(); ++i)
                    index[faces_by_card[c - 1][i]] = static_cast<int>(i);
                std::vector<SparseVec> cols;
                for (int mask : faces_by_card[c]) {
                    SparseVec col;
                    int sign = 1;
                    for (int bpos = 0; bpos < s; ++bpos) {
                        if (!(mask & (1 << bpos))) continue;
                        int sub = mask ^ (1 << bpos);
                        auto it = index.find(sub);
                        if (it != index.end())
                            col.push_back({it->second, Coeff(sign, field)});
                        sign = -sign;
                    }
                    std::sort(col.begin(), col.end(),
                              [](auto& a, auto& b) { return a.first < b.first; });
                    cols.push_back(std::move(col));
                }
                rank_card[c] = sparse_rank(cols);
            }
            MultiDegree deg = ring->monomial_degree(b);
            for (int k = 0; k <= s; ++k) {
                int dim = static_cast<int>(faces_by_card[k].size()) - rank_card[k] - rank_card[k + 1];
                if (dim > 0) table.add(k, deg, dim);
            }
        }
    }
    return table;
}

BettiTable eliahou_kervaire_betti(const MonomialIdeal& ideal) {
    if (!is_strongly_stable(ideal)) throw Error("Eliahou-Kervaire needs a strongly stable ideal");
    BettiTable table;
    const RingPtr& ring = ideal.ring();
    for (const auto& u : ideal.gens()) {
        int maxvar = -1;
        for (int i = 0; i < u.nvars(); ++i)
            if (u.exp(i)) maxvar = i;
        // binom(maxvar, k) entries in total degree deg(u) + k
        for (int k = 0; k <= maxvar; ++k) {
            long b = 1;
            for (int i = 0; i < k; ++i) b = b * (maxvar - i) / (i + 1);
            MultiDegree d = ring->monomial_degree(u);
            d[0] += k;
            table.add(k, d, static_cast<int>(b));
        }
    }
    return table;
}

MonomialIdeal monomial_ideal_from_json(const nlohmann::json& j) {
    RingPtr ring = ring_from_json(j.at("ring"));
    std::vector<Monomial> gens;
    for (const auto& s : j.at("generators")) {
        Polynomial p = parse_polynomial(s.get<std::string>(), ring);
        if (p.is_zero()) continue;
        if (!p.is_monomial() || !p.leading().coeff.is_one())
            throw Error("generator is not a monic monomial: " + s.get<std::string>());
        gens.push_back(p.leading().mono);
    }
    return MonomialIdeal(ring, std::move(gens));
}

nlohmann::json monomial_ideal_to_json(const MonomialIdeal& ideal) {
    nlohmann::json j;
    j["ring"] = ring_to_json(ideal.ring());
    nlohmann::json g = nlohmann::json::array();
    for (const auto& m : ideal.gens())
        g.push_back(Polynomial::monomial(ideal.ring(), m, ideal.ring()->cone()).str());
    j["generators"] = g;
    return j;
}

}  // namespace linprod
