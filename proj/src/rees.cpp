#include "linprod/rees.hpp"

#include <algorithm>
#include <functional>

#include "linprod/idealops.hpp"
#include "linprod/linalg.hpp"

namespace linprod {

int ReesPresentation::zvar(int i, int j) const {
    int idx = nbase;
    for (int b = 0; b < i; ++b) idx += static_cast<int>(gens[b].size());
    return idx + j;
}

std::vector<Monomial> ReesPresentation::z_image_monomials() const {
    std::vector<Monomial> out;
    for (const auto& block : gens)
        for (const auto& f : block) out.push_back(f.leading().mono);
    return out;
}

namespace {

ReesPresentation build_presentation(const RingPtr& base,
                                    std::vector<std::vector<Polynomial>> gens, bool monomial) {
    ReesPresentation pres;
    pres.base = base;
    pres.monomial = monomial;
    pres.nbase = base->nvars();
    int w = static_cast<int>(gens.size());
    std::vector<std::string> vars = base->var_names();
    std::vector<MultiDegree> grading;
    for (int i = 0; i < pres.nbase; ++i) {
        MultiDegree d(w + 1, 0);
        d[0] = 1;
        grading.push_back(d);
    }
    for (int i = 0; i < w; ++i) {
        if (gens[i].empty()) throw Error("zero ideal in a Rees presentation");
        int d = gens[i].front().degree();
        for (const auto& f : gens[i]) {
            if (!f.is_homogeneous() || f.degree() != d)
                throw Error("Rees presentation requires equigenerated ideals");
        }
        pres.degrees.push_back(d);
        for (std::size_t j = 0; j < gens[i].size(); ++j) {
            vars.push_back("Z" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
            MultiDegree dg(w + 1, 0);
            dg[i + 1] = 1;
            grading.push_back(dg);
        }
    }
    pres.gens = std::move(gens);
    pres.ambient = Ring::make(std::move(vars), base->field(), std::nullopt, std::move(grading));
    return pres;
}

}  // namespace

ReesPresentation rees_present(const std::vector<MonomialIdeal>& ideals) {
    if (ideals.empty()) throw Error("empty ideal list");
    RingPtr base = ideals.front().ring();
    std::vector<std::vector<Polynomial>> gens;
    for (const auto& ideal : ideals) {
        check_same_ring(base, ideal.ring());
        std::vector<Polynomial> block;
        for (const auto& m : ideal.gens())
            block.push_back(Polynomial::monomial(base, m, base->cone()));
        gens.push_back(std::move(block));
    }
    return build_presentation(base, std::move(gens), true);
}

ReesPresentation rees_present(const std::vector<PolyIdeal>& ideals, const GBOptions& opts) {
    if (ideals.empty()) throw Error("empty ideal list");
    RingPtr base = ideals.front().ring();
    std::vector<std::vector<Polynomial>> gens;
    bool monomial = true;
    for (const auto& ideal : ideals) {
        check_same_ring(base, ideal.ring());
        auto block = minimalize_generators(ideal.gens(), opts);
        for (const auto& f : block)
            if (!f.is_monomial()) monomial = false;
        gens.push_back(std::move(block));
    }
    return build_presentation(base, std::move(gens), monomial);
}

PolyIdeal rees_defining_ideal(const ReesPresentation& pres, const GBOptions& opts) {
    int w = pres.nfactors();
    // graph ring: T block first, then the ambient variables
    std::vector<std::string> tnames;
    for (int i = 0; i < w; ++i) tnames.push_back("@T" + std::to_string(i + 1));
    RingPtr graph_ring = ring_with_front_vars(pres.ambient, tnames);
    std::vector<int> up_base(pres.nbase);
    for (int i = 0; i < pres.nbase; ++i) up_base[i] = w + i;
    std::vector<Polynomial> graph;
    for (int i = 0; i < w; ++i) {
        for (std::size_t j = 0; j < pres.gens[i].size(); ++j) {
            Polynomial z = Polynomial::variable(graph_ring, w + pres.zvar(i, static_cast<int>(j)));
            Polynomial f = map_vars(pres.gens[i][j], graph_ring, up_base);
            Polynomial t = Polynomial::variable(graph_ring, i);
            graph.push_back(z - f * t);
        }
    }
    std::vector<int> kill(w);
    for (int i = 0; i < w; ++i) kill[i] = i;
    std::vector<int> down(graph_ring->nvars(), -1);
    for (int i = 0; i < pres.ambient->nvars(); ++i) down[w + i] = i;
    std::vector<Polynomial> out;
    for (const auto& g : eliminate(PolyIdeal(graph_ring, std::move(graph)), kill, opts))
        out.push_back(map_vars(g, pres.ambient, down));
    return PolyIdeal(pres.ambient, minimalize_generators(std::move(out), opts));
}

DegreeTally tally_of_generators(const ReesPresentation&,
                                const std::vector<Polynomial>& gens) {
    DegreeTally t;
    for (const auto& g : gens) {
        MultiDegree d = g.multidegree();
        t.full[d]++;
        int tdeg = 0;
        for (std::size_t i = 1; i < d.size(); ++i) tdeg += d[i];
        t.collapsed[{d[0], tdeg}]++;
    }
    return t;
}

nlohmann::json DegreeTally::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [deg, cnt] : collapsed)
        arr.push_back({{"degree", std::vector<int>{deg.first, deg.second}}, {"count", cnt}});
    nlohmann::json jf = nlohmann::json::array();
    for (const auto& [deg, cnt] : full) jf.push_back({{"degree", deg}, {"count", cnt}});
    return {{"collapsed", arr}, {"full", jf}};
}

namespace {

// Degreewise kernel for monomial presentations: the graded piece of the
// defining ideal splits over the fibers of Phi on ambient monomials.
struct Fiber {
    std::vector<Monomial> elems;        // ambient monomials with a common image
    std::map<Monomial, int> index;
};

using FiberMap = std::map<Monomial, Fiber>;  // image monomial -> fiber

struct MonomialDegreewise {
    const ReesPresentation& pres;
    int w;
    std::vector<Monomial> z_images;
    std::map<MultiDegree, FiberMap> levels;          // (j, h) -> fibers
    std::map<MultiDegree, std::map<Monomial, std::vector<SparseVec>>> kernels;

    explicit MonomialDegreewise(const ReesPresentation& p)
        : pres(p), w(p.nfactors()), z_images(p.z_image_monomials()) {}

    Monomial image_of(const Monomial& amb) const {
        Monomial img(pres.nbase);
        std::vector<int> e(pres.nbase, 0);
        for (int i = 0; i < pres.nbase; ++i) e[i] = amb.exp(i);
        img = Monomial(e);
        for (int z = 0; z < static_cast<int>(z_images.size()); ++z) {
            int k = amb.exp(pres.nbase + z);
            for (int t = 0; t < k; ++t) img = img * z_images[z];
        }
        return img;
    }

    FiberMap& level(const MultiDegree& target) {
        auto it = levels.find(target);
        if (it != levels.end()) return it->second;
        FiberMap fm;
        // enumerate ambient monomials of multidegree `target`
        const RingPtr& S = pres.ambient;
        std::vector<int> e(S->nvars(), 0);
        std::function<void(int, MultiDegree)> rec = [&](int v, MultiDegree rem) {
            if (total(rem) == 0) {
                Monomial amb(e);
                Monomial img = image_of(amb);
                Fiber& f = fm[img];
                f.index[amb] = static_cast<int>(f.elems.size());
                f.elems.push_back(amb);
                return;
            }
            if (v >= S->nvars()) return;
            const MultiDegree& vd = S->var_degree(v);
            MultiDegree r = rem;
            for (int k = 0;; ++k) {
                bool ok = true;
                for (std::size_t i = 0; i < r.size(); ++i)
                    if (r[i] < 0) ok = false;
                if (!ok) break;
                e[v] = k;
                rec(v + 1, r);
                r = r - vd;
            }
            e[v] = 0;
        };
        rec(0, target);
        return levels.emplace(target, std::move(fm)).first->second;
    }

    // process one multidegree; returns new minimal generators found there
    std::vector<Polynomial> process(const MultiDegree& target) {
        const RingPtr& S = pres.ambient;
        FiberMap& fm = level(target);
        std::vector<Polynomial> new_gens;
        auto& kmap = kernels[target];
        for (auto& [img, fiber] : fm) {
            if (fiber.elems.size() <= 1) continue;
            IncrementalSpan span;
            std::vector<SparseVec> kernel_basis;
            // seed with images of lower kernels under multiplication by a variable
            for (int v = 0; v < S->nvars(); ++v) {
                MultiDegree low = target - S->var_degree(v);
                bool ok = true;
                for (int x : low)
                    if (x < 0) ok = false;
                if (!ok) continue;
                auto lit = kernels.find(low);
                if (lit == kernels.end()) continue;
                Monomial vmono = Monomial::unit_of(S->nvars(), v);
                Monomial low_img(pres.nbase);
                if (v < pres.nbase) {
                    if (img.exp(v) == 0) continue;
                    low_img = img / Monomial::unit_of(pres.nbase, v);
                } else {
                    const Monomial& zi = z_images[v - pres.nbase];
                    if (!zi.divides(img)) continue;
                    low_img = img / zi;
                }
                auto kit = lit->second.find(low_img);
                if (kit == lit->second.end()) continue;
                const FiberMap& lowfm = levels.at(low);
                const Fiber& lowfiber = lowfm.at(low_img);
                for (const SparseVec& kv : kit->second) {
                    SparseVec lifted;
                    for (const auto& [idx, c] : kv) {
                        Monomial m = lowfiber.elems[idx] * vmono;
                        auto pit = fiber.index.find(m);
                        if (pit == fiber.index.end())
                            throw Error("degreewise internal: fiber lift failed");
                        lifted.push_back({pit->second, c});
                    }
                    std::sort(lifted.begin(), lifted.end(),
                              [](auto& a, auto& b) { return a.first < b.first; });
                    if (span.add(lifted)) kernel_basis.push_back(lifted);
                }
            }
            // extend with fresh differences: each independent one is a new
            // minimal generator
            for (std::size_t s = 1; s < fiber.elems.size(); ++s) {
                SparseVec diff{{0, pres.base->cone()}, {static_cast<int>(s), -pres.base->cone()}};
                if (span.add(diff)) {
                    kernel_basis.push_back(diff);
                    Polynomial g =
                        Polynomial::monomial(S, fiber.elems[0], pres.base->cone()) -
                        Polynomial::monomial(S, fiber.elems[s], pres.base->cone());
                    new_gens.push_back(std::move(g));
                }
            }
            if (!kernel_basis.empty()) kmap[img] = std::move(kernel_basis);
        }
        return new_gens;
    }
};

}  // namespace

DegreewiseResult rees_defining_degreewise(const ReesPresentation& pres, int t_bound,
                                          int x_bound) {
    if (!pres.monomial)
        throw Error("degreewise method currently requires monomial ideals");
    DegreewiseResult res;
    res.t_bound = t_bound;
    res.x_bound = x_bound;
    MonomialDegreewise dw(pres);
    int w = pres.nfactors();
    // enumerate h with |h| <= t_bound in increasing total degree
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
    std::sort(hs.begin(), hs.end(), [](const MultiDegree& a, const MultiDegree& b) {
        if (total(a) != total(b)) return total(a) < total(b);
        return a < b;
    });
    for (const auto& hv : hs) {
        for (int j = 0; j <= x_bound; ++j) {
            MultiDegree target(w + 1, 0);
            target[0] = j;
            for (int i = 0; i < w; ++i) target[i + 1] = hv[i];
            auto gens = dw.process(target);
            for (auto& g : gens) res.generators.push_back(std::move(g));
        }
    }
    res.tally = tally_of_generators(pres, res.generators);
    return res;
}

PolyIdeal fiber_defining_ideal(const ReesPresentation& pres, const GBOptions& opts) {
    // source ring: just the Z variables, graded by T-degree
    std::vector<std::string> vars;
    std::vector<MultiDegree> grading;
    int w = pres.nfactors();
    for (int i = 0; i < w; ++i)
        for (std::size_t j = 0; j < pres.gens[i].size(); ++j) {
            vars.push_back(pres.ambient->var_name(pres.zvar(i, static_cast<int>(j))));
            MultiDegree d(w, 0);
            d[i] = 1;
            grading.push_back(d);
        }
    RingPtr source = Ring::make(std::move(vars), pres.base->field(), std::nullopt, grading);
    // images are f_{i,j} T_i inside R[T]: the fiber ring is the subalgebra
    // generated by the degree-e_i elements of the Rees algebra
    std::vector<std::string> tnames;
    for (int i = 0; i < w; ++i) tnames.push_back("@T" + std::to_string(i + 1));
    RingPtr rt = ring_with_front_vars(pres.base, tnames);
    std::vector<int> up(pres.nbase);
    for (int i = 0; i < pres.nbase; ++i) up[i] = w + i;
    std::vector<Polynomial> images;
    for (int i = 0; i < w; ++i)
        for (const auto& f : pres.gens[i])
            images.push_back(map_vars(f, rt, up) * Polynomial::variable(rt, i));
    return kernel_of_map(source, images, opts);
}

bool is_fiber_type(const ReesPresentation&, const std::vector<Polynomial>& minimal_gens) {
    for (const auto& g : minimal_gens) {
        MultiDegree d = g.multidegree();
        int tdeg = 0;
        for (std::size_t i = 1; i < d.size(); ++i) tdeg += d[i];
        if (tdeg == 1) continue;   // symmetric-algebra relation
        if (d[0] == 0) continue;   // fiber relation
        return false;
    }
    return true;
}

InitialCriterion initial_criterion(const PolyIdeal& defining, int nbase,
                                   const MonomialOrder& ord, const GBOptions& opts) {
    InitialCriterion out;
    MonomialIdeal ini(defining.ring(), defining.initial_monomials(ord, opts));
    out.initial_gens = ini.gens();
    out.all_linear_in_x = true;
    out.all_quadratic = true;
    for (const auto& m : out.initial_gens) {
        int xdeg = 0;
        for (int i = 0; i < nbase; ++i) xdeg += m.exp(i);
        if (xdeg > 1) out.all_linear_in_x = false;
        if (m.degree() != 2) out.all_quadratic = false;
    }
    return out;
}

NormalityEvidence normality_evidence(const std::vector<MonomialIdeal>& ideals, int hmax) {
    NormalityEvidence ev;
    int w = static_cast<int>(ideals.size());
    std::vector<int> h(w, 0);
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == w) {
            if (total(MultiDegree(h.begin(), h.end())) == 0) return;
            MonomialIdeal prod = MonomialIdeal::unit(ideals.front().ring());
            for (int i = 0; i < w; ++i) prod = mi_product(prod, mi_power(ideals[i], h[i]));
            bool closed = is_integrally_closed(prod);
            if (!closed) ev.all_closed = false;
            ev.per_power.push_back({h, closed});
            return;
        }
        for (int v = 0; v <= left; ++v) {
            h[pos] = v;
            rec(pos + 1, left - v);
        }
        h[pos] = 0;
    };
    rec(0, hmax);
    return ev;
}

HilbertSeries rees_hilbert_series(const ReesPresentation& pres, const PolyIdeal& defining,
                                  const MonomialOrder& ord, const GBOptions& opts) {
    MonomialIdeal ini(pres.ambient, defining.initial_monomials(ord, opts));
    return hilbert_series(ini);
}

GradedPresentation to_graded_presentation(const ReesPresentation& pres,
                                          const std::vector<Polynomial>& relations) {
    GradedPresentation g;
    g.ambient = pres.ambient;
    g.nbase = pres.nbase;
    g.relations = relations;
    g.fine = pres.monomial;
    if (pres.monomial) g.z_images = pres.z_image_monomials();
    return g;
}

}  // namespace linprod
