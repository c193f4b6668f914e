#include "linprod/linres.hpp"

namespace linprod {

BettiTable resolution_betti(const FreeResolution& res) {
    BettiTable t;
    for (int k = 1; k < static_cast<int>(res.shifts.size()); ++k)
        for (const auto& g : res.shifts[k]) t.add(k - 1, g);
    return t;
}

BettiTable betti_ideal(const PolyIdeal& ideal, const GBOptions& opts) {
    return resolution_betti(minimal_resolution(ideal, opts));
}

BettiTable betti_quotient_from_ideal(const BettiTable& ideal_table, int grading_width) {
    BettiTable t;
    t.add(0, MultiDegree(grading_width, 0));
    for (const auto& [kg, r] : ideal_table.entries) t.add(kg.first + 1, kg.second, r);
    return t;
}

int regularity(const PolyIdeal& ideal, const GBOptions& opts) {
    if (ideal.is_zero_ideal()) return 0;
    BettiTable t = betti_ideal(ideal, opts);
    if (t.empty()) return 0;
    return t.reg_total();
}

int regularity(const MonomialIdeal& ideal) {
    if (ideal.is_zero()) return 0;
    if (ideal.is_unit()) return 0;
    BettiTable t = betti_upper_koszul(ideal);
    if (t.empty()) return 0;
    return t.reg_total();
}

LinearVerdict linear_verdict_from_table(const BettiTable& table, int d) {
    LinearVerdict v;
    v.degree = d;
    for (const auto& [kg, r] : table.entries) {
        if (r <= 0) continue;
        if (total(kg.second) != d + kg.first) {
            v.linear = false;
            v.diagnostic = "shift of total degree " + std::to_string(total(kg.second)) +
                           " at homological index " + std::to_string(kg.first) + " (expected " +
                           std::to_string(d + kg.first) + ")";
            return v;
        }
    }
    v.linear = true;
    return v;
}

LinearVerdict has_linear_resolution(const MonomialIdeal& ideal) {
    if (ideal.is_zero() || ideal.is_unit()) return {true, ideal.is_unit() ? 0 : -1, ""};
    int d = ideal.equigenerated_degree();
    if (d < 0) return {false, -1, "not generated in a single degree"};
    return linear_verdict_from_table(betti_upper_koszul(ideal), d);
}

LinearVerdict has_linear_resolution(const PolyIdeal& ideal, const GBOptions& opts) {
    if (ideal.is_zero_ideal()) return {true, -1, ""};
    auto gens = minimalize_generators(ideal.gens(), opts);
    int d = gens.front().degree();
    for (const auto& g : gens) {
        if (!g.is_homogeneous()) return {false, -1, "inhomogeneous generator"};
        if (g.degree() != d) return {false, -1, "not generated in a single degree"};
    }
    if (d == 0) return {true, 0, ""};  // unit ideal
    return linear_verdict_from_table(betti_ideal(PolyIdeal(ideal.ring(), gens), opts), d);
}

nlohmann::json Reg0Certificate::to_json() const {
    nlohmann::json j;
    j["reg0_up_to_bound"] = reg0;
    j["t_bound"] = t_bound;
    j["x_bound"] = x_bound;
    nlohmann::json w = nlohmann::json::array();
    for (const auto& t : tor)
        w.push_back({{"k", t.k}, {"degree", t.degree}, {"dim", t.dim}});
    j["tor"] = w;
    return j;
}

RomerReport romer_bound_check(const std::vector<MonomialIdeal>& ideals,
                              const std::vector<int>& h, const Reg0Certificate& cert) {
    RomerReport rep;
    if (ideals.empty()) {
        rep.holds = true;
        return rep;
    }
    MonomialIdeal prod = MonomialIdeal::unit(ideals.front().ring());
    int dh = 0;
    for (std::size_t i = 0; i < ideals.size(); ++i) {
        prod = mi_product(prod, mi_power(ideals[i], h[i]));
        dh += ideals[i].equigenerated_degree() * h[i];
    }
    rep.reg_product = regularity(prod);
    rep.bound = dh + cert.reg0;
    rep.holds = rep.reg_product <= rep.bound;
    rep.attained = rep.reg_product == rep.bound;
    return rep;
}

}  // namespace linprod
