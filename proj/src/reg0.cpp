#include "linprod/linres.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "linprod/linalg.hpp"

namespace linprod {

namespace {

// Basis element of Lambda^k(S-variables) tensor S at a fixed multidegree.
struct Elt {
    std::vector<int> tau;  // sorted variable indices
    Monomial mu;
};

using Key = std::vector<int>;  // fine content or the coarse multidegree

struct Level {
    std::vector<Elt> elems;
    std::map<std::pair<std::vector<int>, std::vector<int>>, int> index;  // (tau, mu exps) -> global
    std::vector<Key> key_of;    // per global index
    std::vector<int> local_of;  // per global index: position inside its key class
    std::map<Key, int> class_size;

    int add(Elt e, const Key& key) {
        int g = static_cast<int>(elems.size());
        index[{e.tau, e.mu.exps()}] = g;
        key_of.push_back(key);
        local_of.push_back(class_size[key]++);
        elems.push_back(std::move(e));
        return g;
    }
    int find(const std::vector<int>& tau, const Monomial& mu) const {
        auto it = index.find({tau, mu.exps()});
        return it == index.end() ? -1 : it->second;
    }
};

struct Scanner {
    const GradedPresentation& pres;
    RingPtr S;
    int nvars;
    int width;  // grading width w+1
    std::vector<MultiDegree> var_deg;
    std::vector<std::vector<int>> var_content;  // fine content per variable
    std::map<MultiDegree, std::vector<Monomial>> mono_cache;

    explicit Scanner(const GradedPresentation& p) : pres(p), S(p.ambient) {
        nvars = S->nvars();
        width = S->grading_width();
        for (int i = 0; i < nvars; ++i) var_deg.push_back(S->var_degree(i));
        if (pres.fine) {
            // content: image exponent in the base ring ++ T-part
            for (int i = 0; i < nvars; ++i) {
                std::vector<int> c(pres.nbase + (width - 1), 0);
                if (i < pres.nbase) {
                    c[i] = 1;
                } else {
                    const Monomial& im = pres.z_images[i - pres.nbase];
                    for (int b = 0; b < pres.nbase; ++b) c[b] = im.exp(b);
                    for (int t = 1; t < width; ++t) c[pres.nbase + t - 1] = var_deg[i][t];
                }
                var_content.push_back(std::move(c));
            }
        }
    }

    Key key_of_pair(const std::vector<int>& tau, const Monomial& mu, const MultiDegree& deg) const {
        if (!pres.fine) return deg;
        Key k(pres.nbase + (width - 1), 0);
        auto addvar = [&](int v, int e) {
            for (std::size_t i = 0; i < k.size(); ++i) k[i] += e * var_content[v][i];
        };
        for (int v : tau) addvar(v, 1);
        for (int v = 0; v < nvars; ++v)
            if (mu.exp(v)) addvar(v, mu.exp(v));
        return k;
    }

    static bool nonneg(const MultiDegree& d) {
        for (int x : d)
            if (x < 0) return false;
        return true;
    }

    const std::vector<Monomial>& monomials_of_degree(const MultiDegree& d) {
        auto it = mono_cache.find(d);
        if (it != mono_cache.end()) return it->second;
        std::vector<Monomial> out;
        std::vector<int> e(nvars, 0);
        std::function<void(int, MultiDegree)> rec = [&](int v, MultiDegree rem) {
            if (total(rem) == 0) {
                out.push_back(Monomial(e));
                return;
            }
            if (v >= nvars) return;
            // max exponent for var v under rem
            int cap = INT32_MAX;
            for (int i = 0; i < width; ++i)
                if (var_deg[v][i] > 0) cap = std::min(cap, rem[i] / var_deg[v][i]);
            for (int ev = 0; ev <= cap; ++ev) {
                e[v] = ev;
                MultiDegree r2 = rem;
                for (int i = 0; i < width; ++i) r2[i] -= ev * var_deg[v][i];
                if (nonneg(r2)) rec(v + 1, r2);
            }
            e[v] = 0;
        };
        rec(0, d);
        return mono_cache.emplace(d, std::move(out)).first->second;
    }

    // all sorted k-subsets of variables with componentwise degree <= target
    void taus_rec(int k, int start, MultiDegree rem, std::vector<int>& cur,
                  std::vector<std::vector<int>>& out) const {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int v = start; v < nvars; ++v) {
            MultiDegree r2 = rem;
            bool ok = true;
            for (int i = 0; i < width; ++i) {
                r2[i] -= var_deg[v][i];
                if (r2[i] < 0) ok = false;
            }
            if (!ok) continue;
            cur.push_back(v);
            taus_rec(k, v + 1, r2, cur, out);
            cur.pop_back();
        }
    }

    Level build_level(int k, const MultiDegree& target) {
        Level lvl;
        std::vector<std::vector<int>> taus;
        std::vector<int> cur;
        taus_rec(k, 0, target, cur, taus);
        for (const auto& tau : taus) {
            MultiDegree rem = target;
            for (int v : tau) rem = rem - var_deg[v];
            for (const auto& mu : monomials_of_degree(rem)) {
                MultiDegree dummy = target;
                lvl.add({tau, mu}, key_of_pair(tau, mu, dummy));
            }
        }
        return lvl;
    }
};

}  // namespace

Reg0Certificate reg0_truncated(const GradedPresentation& pres, int t_bound, int x_bound) {
    Reg0Certificate cert;
    cert.t_bound = t_bound;
    cert.x_bound = x_bound;
    if (!pres.relations.empty()) {
        bool visible = false;
        for (const auto& rel : pres.relations) {
            MultiDegree d = rel.multidegree();
            int tdeg = 0;
            for (std::size_t i = 1; i < d.size(); ++i) tdeg += d[i];
            if (tdeg <= t_bound && d[0] <= x_bound) visible = true;
        }
        if (!visible)
            throw Error("reg0 window (t_bound " + std::to_string(t_bound) + ", x_bound " +
                        std::to_string(x_bound) + ") sees no defining relation");
    }
    Scanner sc(pres);
    int width = sc.width;
    int w = width - 1;
    FieldSpec field = pres.ambient->field();

    // enumerate T-degree vectors h >= 0 with |h| <= t_bound
    std::vector<MultiDegree> hs;
    MultiDegree h(w, 0);
    std::function<void(int, int)> hrec = [&](int pos, int left) {
        if (pos == w) {
            hs.push_back(h);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            h[pos] = v;
            hrec(pos + 1, left - v);
        }
        h[pos] = 0;
    };
    hrec(0, t_bound);

    for (const auto& hvec : hs) {
        for (int j = 0; j <= x_bound; ++j) {
            MultiDegree target(width, 0);
            target[0] = j;
            for (int i = 0; i < w; ++i) target[i + 1] = hvec[i];
            int kmax = j;
            for (int i = 0; i < w; ++i) kmax += hvec[i];

            std::vector<Level> levels;
            for (int k = 0; k <= kmax; ++k) levels.push_back(sc.build_level(k, target));

            // N columns per level: (tau, rel * nu)
            // rank_N[k][key], rank_DN[k][key]
            std::vector<std::map<Key, std::vector<SparseVec>>> ncols(kmax + 1);
            for (int k = 0; k <= kmax; ++k) {
                // distinct taus at this level
                std::set<std::vector<int>> taus;
                for (const auto& e : levels[k].elems) taus.insert(e.tau);
                for (const auto& tau : taus) {
                    MultiDegree rem = target;
                    for (int v : tau) rem = rem - sc.var_deg[v];
                    for (const auto& rel : pres.relations) {
                        MultiDegree rd = rel.multidegree();
                        MultiDegree res = rem - rd;
                        if (!Scanner::nonneg(res)) continue;
                        for (const auto& nu : sc.monomials_of_degree(res)) {
                            SparseVec col;
                            Key key;
                            for (const auto& term : rel.terms()) {
                                Monomial m = term.mono * nu;
                                int g = levels[k].find(tau, m);
                                if (g < 0) throw Error("reg0 internal: basis lookup failed");
                                key = levels[k].key_of[g];
                                col.push_back({levels[k].local_of[g], term.coeff});
                            }
                            std::sort(col.begin(), col.end(),
                                      [](auto& a, auto& b) { return a.first < b.first; });
                            // merge duplicate coordinates
                            SparseVec merged;
                            for (auto& [i, c] : col) {
                                if (!merged.empty() && merged.back().first == i)
                                    merged.back().second += c;
                                else
                                    merged.push_back({i, c});
                            }
                            merged.erase(std::remove_if(merged.begin(), merged.end(),
                                                        [](auto& p) { return p.second.is_zero(); }),
                                         merged.end());
                            if (!merged.empty()) ncols[k][key].push_back(std::move(merged));
                        }
                    }
                }
            }

            std::vector<std::map<Key, int>> rank_n(kmax + 2), rank_dn(kmax + 2);
            for (int k = 0; k <= kmax; ++k)
                for (const auto& [key, cols] : ncols[k]) rank_n[k][key] = sparse_rank(cols);

            // rank_DN[k] = rank( D(V_k) ∪ N_{k-1} ), k = 1..kmax+1 (V_{kmax+1} empty)
            for (int k = 1; k <= kmax + 1; ++k) {
                std::map<Key, IncrementalSpan> spans;
                if (k - 1 <= kmax)
                    for (const auto& [key, cols] : ncols[k - 1]) {
                        auto& span = spans[key];
                        for (const auto& c : cols) span.add(c);
                    }
                if (k <= kmax) {
                    const Level& up = levels[k];
                    const Level& down = levels[k - 1];
                    for (const auto& e : up.elems) {
                        SparseVec col;
                        Key key;
                        int sign = 1;
                        for (std::size_t p = 0; p < e.tau.size(); ++p) {
                            std::vector<int> sub = e.tau;
                            sub.erase(sub.begin() + static_cast<long>(p));
                            Monomial m = e.mu * Monomial::unit_of(sc.nvars, e.tau[p]);
                            int g = down.find(sub, m);
                            if (g < 0) throw Error("reg0 internal: differential lookup failed");
                            key = down.key_of[g];
                            col.push_back({down.local_of[g], Coeff(sign, field)});
                            sign = -sign;
                        }
                        std::sort(col.begin(), col.end(),
                                  [](auto& a, auto& b) { return a.first < b.first; });
                        if (!col.empty()) spans[key].add(col);
                    }
                }
                for (auto& [key, span] : spans) rank_dn[k][key] = span.rank();
            }

            // H_k per key
            for (int k = 0; k <= kmax; ++k) {
                std::map<Key, int> hdim;
                for (const auto& [key, sz] : levels[k].class_size) hdim[key] = sz;
                int tor_dim = 0;
                for (auto& [key, sz] : hdim) {
                    int d = sz;
                    auto get = [](const std::map<Key, int>& m, const Key& key) {
                        auto it = m.find(key);
                        return it == m.end() ? 0 : it->second;
                    };
                    d -= get(rank_dn[k], key);
                    d -= get(rank_dn[k + 1], key);
                    if (k >= 1) d += get(rank_n[k - 1], key);
                    tor_dim += d;
                }
                if (tor_dim > 0) {
                    MultiDegree deg(width, 0);
                    deg[0] = j;
                    for (int i = 0; i < w; ++i) deg[i + 1] = hvec[i];
                    cert.tor.push_back({k, deg, tor_dim});
                    cert.reg0 = std::max(cert.reg0, j - k);
                }
            }
        }
    }
    std::sort(cert.tor.begin(), cert.tor.end(), [](const Reg0Witness& a, const Reg0Witness& b) {
        if (a.k != b.k) return a.k < b.k;
        return a.degree < b.degree;
    });
    return cert;
}

}  // namespace linprod
