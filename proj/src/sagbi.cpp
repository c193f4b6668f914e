#include "linprod/sagbi.hpp"

#include <functional>

namespace linprod {

SagbiInstance make_sagbi_instance(RingPtr ring, MonomialOrder order,
                                  std::vector<Polynomial> gens, const GBOptions& opts,
                                  bool lattice_shortcut) {
    SagbiInstance inst;
    inst.ring = std::move(ring);
    inst.order = std::move(order);
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        inst.gens.push_back(std::move(g));
    }
    std::vector<std::string> znames;
    for (std::size_t i = 0; i < inst.gens.size(); ++i) {
        inst.leads.push_back(inst.gens[i].leading(inst.order).mono);
        znames.push_back("W" + std::to_string(i + 1));
    }
    inst.zring = Ring::make(std::move(znames), inst.ring->field());
    if (lattice_shortcut) {
        inst.kernel_psi = toric_kernel(inst.zring, inst.leads, inst.ring, opts);
    } else {
        std::vector<Polynomial> images;
        for (const auto& m : inst.leads)
            images.push_back(Polynomial::monomial(inst.ring, m, inst.ring->cone()));
        inst.kernel_psi = kernel_of_map(inst.zring, images, opts);
    }
    return inst;
}

namespace {

// lexicographically smallest c >= 0 with sum c_i * leads_i == target
bool factor_in_monoid(const std::vector<Monomial>& leads, const Monomial& target,
                      std::vector<int>& c) {
    int m = static_cast<int>(leads.size());
    c.assign(m, 0);
    std::function<bool(int, Monomial)> rec = [&](int i, Monomial rest) {
        if (rest.is_one()) {
            for (int j = i; j < m; ++j) c[j] = 0;
            return true;
        }
        if (i == m) return false;
        int cap = 0;
        {
            Monomial r = rest;
            while (leads[i].divides(r) && !leads[i].is_one()) {
                r = r / leads[i];
                ++cap;
            }
        }
        for (int k = 0; k <= cap; ++k) {
            c[i] = k;
            Monomial r = rest;
            for (int t = 0; t < k; ++t) r = r / leads[i];
            if (rec(i + 1, r)) return true;
        }
        c[i] = 0;
        return false;
    };
    return rec(0, target);
}

}  // namespace

SubductionResult subduct(const Polynomial& g, const SagbiInstance& inst, long step_budget) {
    SubductionResult res;
    Polynomial h = g;
    long steps = 0;
    while (!h.is_zero()) {
        if (++steps > step_budget) throw BudgetError("subduction step budget exhausted", steps);
        const Term& lt = h.leading(inst.order);
        std::vector<int> c;
        if (!factor_in_monoid(inst.leads, lt.mono, c)) break;
        Coeff lc = inst.ring->cone();
        Polynomial prod = Polynomial::constant(inst.ring, inst.ring->cone());
        for (std::size_t i = 0; i < inst.gens.size(); ++i) {
            for (int k = 0; k < c[i]; ++k) {
                prod *= inst.gens[i];
                lc = lc * inst.gens[i].leading(inst.order).coeff;
            }
        }
        Coeff lambda = lt.coeff / lc;
        h -= prod.mul_scalar(lambda);
        res.trace.push_back({c, lambda});
    }
    res.remainder = h;
    return res;
}

SagbiCertificate is_sagbi(const SagbiInstance& inst, const GBOptions& opts) {
    SagbiCertificate cert;
    cert.verdict = true;
    const auto& basis = inst.kernel_psi.basis(inst.zring->default_order(), opts);
    for (const auto& b : basis) {
        if (b.nterms() != 2) throw Error("kernel of a monomial map must be binomial");
        // Phi(b): substitute the generators into the binomial
        Polynomial image = Polynomial::zero(inst.ring);
        for (const auto& t : b.terms()) {
            Polynomial prod = Polynomial::constant(inst.ring, t.coeff);
            for (int i = 0; i < inst.zring->nvars(); ++i)
                for (int k = 0; k < t.mono.exp(i); ++k) prod *= inst.gens[i];
            image += prod;
        }
        if (!image.is_zero()) {
            // contract: ini(Phi(b)) < ini(Phi(nu_1)) = Psi(nu_1)
            Monomial psi_nu(inst.ring->nvars());
            const Monomial& nu = b.terms()[0].mono;
            for (int i = 0; i < inst.zring->nvars(); ++i)
                for (int k = 0; k < nu.exp(i); ++k) psi_nu = psi_nu * inst.leads[i];
            if (!inst.order.less(image.leading(inst.order).mono, psi_nu))
                throw Error("lifting contract violated: image leading monomial did not drop");
        }
        SubductionResult sub = subduct(image, inst);
        cert.traces.push_back({b.str(), sub.trace});
        if (!sub.remainder.is_zero()) {
            cert.verdict = false;
            cert.failures.push_back(b.str());
            continue;
        }
        Polynomial lifted = b;
        for (const auto& step : sub.trace) {
            std::vector<int> e(inst.zring->nvars(), 0);
            for (std::size_t i = 0; i < step.exponents.size(); ++i) e[i] = step.exponents[i];
            lifted -= Polynomial::monomial(inst.zring, Monomial(e), step.coeff);
        }
        cert.lifted.push_back(std::move(lifted));
    }
    return cert;
}

SagbiInstance northeast_rees_instance(const NortheastSpec& spec, const GBOptions& opts) {
    spec.validate();
    int n = spec.n;
    int w = static_cast<int>(spec.pairs.size());
    // R[T]: matrix variables then T_1..T_w, ordered by plain lex so each
    // minor leads with its main diagonal
    std::vector<std::string> vars;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) vars.push_back("x" + std::to_string(i) + std::to_string(j));
    for (int i = 1; i <= w; ++i) vars.push_back("T" + std::to_string(i));
    RingPtr rt = Ring::make(vars, FieldSpec{});
    RingPtr mat = Ring::matrix(n, n);
    std::vector<int> up(mat->nvars());
    for (int i = 0; i < mat->nvars(); ++i) up[i] = i;
    std::vector<Polynomial> gens;
    for (int v = 0; v < n * n; ++v) gens.push_back(Polynomial::variable(rt, v));
    for (int i = 0; i < w; ++i) {
        auto [t, a] = spec.pairs[i];
        PolyIdeal minors = ne_minor_ideal(mat, t, a);
        for (const auto& minor : minors.gens())
            gens.push_back(map_vars(minor, rt, up) * Polynomial::variable(rt, n * n + i));
    }
    return make_sagbi_instance(rt, MonomialOrder::lex(), std::move(gens), opts);
}

bool rees_sagbi_check(const NortheastSpec& spec, const GBOptions& opts) {
    return is_sagbi(northeast_rees_instance(spec, opts), opts).verdict;
}

namespace {

Polynomial spair_of(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord) {
    const Term& tf = f.leading(ord);
    const Term& tg = g.leading(ord);
    Monomial l = lcm(tf.mono, tg.mono);
    Polynomial a = f.mul_term(l / tf.mono, tf.coeff.inverse());
    Polynomial b = g.mul_term(l / tg.mono, tg.coeff.inverse());
    return a - b;
}

}  // namespace

bool is_groebner_basis(const std::vector<Polynomial>& gens, const MonomialOrder& ord,
                       const GBOptions&) {
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
            Polynomial s = spair_of(gens[i], gens[j], ord);
            if (!normal_form(s, gens, ord).is_zero()) return false;
        }
    return true;
}

GbLiftReport gb_lift_check(const SagbiInstance& inst, const GBOptions& opts) {
    GbLiftReport rep;
    const auto& basis = inst.kernel_psi.basis(inst.zring->default_order(), opts);
    rep.b_is_groebner = is_groebner_basis(basis, inst.zring->default_order(), opts);
    if (!rep.b_is_groebner) return rep;
    SagbiCertificate cert = is_sagbi(inst, opts);
    if (!cert.verdict) return rep;
    // lifted order: compare Psi images under the ring order, ties by the
    // presentation order
    std::vector<std::vector<int>> images;
    for (const auto& m : inst.leads) images.push_back(m.exps());
    MonomialOrder lifted_order =
        MonomialOrder::lifted(images, inst.order, inst.zring->default_order());
    rep.lifted_is_groebner = is_groebner_basis(cert.lifted, lifted_order, opts);
    rep.verdict = rep.lifted_is_groebner;
    return rep;
}

}  // namespace linprod
