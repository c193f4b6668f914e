#include <chrono>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "linprod/linres.hpp"
#include "linprod/parse.hpp"
#include "linprod/rees.hpp"
#include "linprod/report.hpp"
#include "linprod/sagbi.hpp"

using namespace linprod;
using nlohmann::json;

namespace {

struct CliOptions {
    int tmax = 2;     // product exponent bound |h|
    int bound = 3;    // Rees T-degree bound
    int xbound = 6;   // Rees x-degree scan bound
    long budget = 1'000'000;
    std::string field = "q";
    bool emit_json = false;
    bool no_timings = false;
    int n_override = 0;
    GBOptions gb() const { return GBOptions{budget}; }
};

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open file: " + path);
    return json::parse(in);
}

void override_field(json& ring_json, const std::string& field) {
    ring_json["field"] = field;
}

struct Timer {
    Report& report;
    std::string name;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    Timer(Report& r, std::string n) : report(r), name(std::move(n)) {}
    ~Timer() {
        report.add_timing(name, std::chrono::duration<double>(
                                    std::chrono::steady_clock::now() - start)
                                    .count());
    }
};

// all exponent vectors h >= 0 with 1 <= |h| <= bound
std::vector<std::vector<int>> exponent_vectors(int w, int bound) {
    std::vector<std::vector<int>> out;
    std::vector<int> h(w, 0);
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == w) {
            for (int x : h)
                if (x) {
                    out.push_back(h);
                    return;
                }
            return;
        }
        for (int v = 0; v <= left; ++v) {
            h[pos] = v;
            rec(pos + 1, left - v);
        }
        h[pos] = 0;
    };
    rec(0, bound);
    return out;
}

std::vector<MonomialIdeal> load_monomial_ideals(const json& payload,
                                                const CliOptions& opt) {
    json rj = payload.at("ring");
    override_field(rj, opt.field);
    RingPtr ring = ring_from_json(rj);
    std::vector<MonomialIdeal> ideals;
    for (const auto& gens : payload.at("ideals")) {
        std::vector<Monomial> ms;
        for (const auto& s : gens) {
            Polynomial p = parse_polynomial(s.get<std::string>(), ring);
            if (!p.is_monomial() || !p.leading().coeff.is_one())
                throw Error("expected a monic monomial: " + s.get<std::string>());
            ms.push_back(p.leading().mono);
        }
        ideals.emplace_back(ring, std::move(ms));
    }
    return ideals;
}

std::vector<LinearIdeal> load_linear_ideals(const json& payload, const CliOptions& opt) {
    json rj = payload.at("ring");
    override_field(rj, opt.field);
    RingPtr ring = ring_from_json(rj);
    std::vector<LinearIdeal> ideals;
    for (const auto& forms : payload.at("ideals")) {
        std::vector<Polynomial> fs;
        for (const auto& s : forms) fs.push_back(parse_polynomial(s.get<std::string>(), ring));
        ideals.emplace_back(ring, fs);
    }
    return ideals;
}

NortheastSpec load_northeast(const json& payload, const CliOptions& opt) {
    NortheastSpec spec;
    spec.n = opt.n_override > 0 ? opt.n_override : payload.at("n").get<int>();
    for (const auto& p : payload.at("pairs"))
        spec.pairs.push_back({p.at(0).get<int>(), p.at(1).get<int>()});
    spec.validate();
    return spec;
}

json decomposition_json(const PolymatroidDecomposition& dec) {
    json comps = json::array();
    for (const auto& c : dec.components)
        comps.push_back({{"prime", c.prime}, {"exponent", c.exponent}});
    json irr = json::array();
    for (const auto& c : dec.irredundant)
        irr.push_back({{"prime", c.prime}, {"exponent", c.exponent}});
    return {{"components", comps}, {"irredundant", irr}, {"equals_ideal", dec.equals_ideal}};
}

void run_polymatroidal(Report& report, const json& payload, const CliOptions& opt) {
    auto ideals = load_monomial_ideals(payload, opt);
    int w = static_cast<int>(ideals.size());
    report.set_bound("tmax", opt.tmax);
    {
        Timer t(report, "predicates");
        bool all = true;
        for (const auto& ideal : ideals)
            if (!is_polymatroidal(ideal)) all = false;
        all ? report.pass("polymatroidal") : report.fail("polymatroidal");
    }
    {
        Timer t(report, "linear_products");
        bool all = true;
        std::string why;
        for (const auto& h : exponent_vectors(w, opt.tmax)) {
            MonomialIdeal prod = MonomialIdeal::unit(ideals.front().ring());
            for (int i = 0; i < w; ++i) prod = mi_product(prod, mi_power(ideals[i], h[i]));
            auto v = has_linear_resolution(prod);
            if (!v.linear) {
                all = false;
                why = v.diagnostic;
            }
        }
        all ? report.pass("linear_products") : report.fail("linear_products", why);
    }
    {
        Timer t(report, "decomposition");
        MonomialIdeal prod = MonomialIdeal::unit(ideals.front().ring());
        for (const auto& ideal : ideals) prod = mi_product(prod, ideal);
        auto dec = polymatroid_decompose(prod);
        dec.equals_ideal ? report.pass("decomposition") : report.fail("decomposition");
        report.put_payload("decomposition", decomposition_json(dec));
    }
    {
        Timer t(report, "ass_chain");
        bool ok = true, constant_ok = true;
        for (const auto& ideal : ideals) {
            auto chain = polymatroid_ass_chain(ideal, opt.tmax + 1);
            if (!chain.chain_inclusions) ok = false;
            if (transversal_presentation(ideal) && !chain.constant) constant_ok = false;
        }
        ok ? report.pass("ass_chain_inclusions") : report.fail("ass_chain_inclusions");
        constant_ok ? report.pass("transversal_ass_constant")
                    : report.fail("transversal_ass_constant");
    }
    {
        Timer t(report, "integral_closure");
        bool all = true;
        for (const auto& h : exponent_vectors(w, opt.tmax)) {
            MonomialIdeal prod = MonomialIdeal::unit(ideals.front().ring());
            for (int i = 0; i < w; ++i) prod = mi_product(prod, mi_power(ideals[i], h[i]));
            if (!is_integrally_closed(prod)) all = false;
        }
        all ? report.pass("products_integrally_closed")
            : report.fail("products_integrally_closed");
    }
}

void run_linear_forms(Report& report, const json& payload, const CliOptions& opt) {
    auto ideals = load_linear_ideals(payload, opt);
    int w = static_cast<int>(ideals.size());
    report.set_bound("tmax", opt.tmax);
    GBOptions gb = opt.gb();
    {
        Timer t(report, "linear_products");
        bool all = true;
        std::string why;
        for (const auto& h : exponent_vectors(w, opt.tmax)) {
            std::vector<LinearIdeal> factors;
            for (int i = 0; i < w; ++i)
                for (int k = 0; k < h[i]; ++k) factors.push_back(ideals[i]);
            auto v = has_linear_resolution(linforms_product(factors), gb);
            if (!v.linear) {
                all = false;
                why = v.diagnostic;
            }
        }
        all ? report.pass("linear_products") : report.fail("linear_products", why);
    }
    {
        Timer t(report, "decomposition");
        auto dec = linforms_decompose(ideals, gb);
        dec.equals_product ? report.pass("decomposition") : report.fail("decomposition");
        json comps = json::array();
        for (const auto& c : dec.components) {
            json rows = json::array();
            for (const auto& f : c.prime.forms()) rows.push_back(f.str());
            comps.push_back(
                {{"prime", rows}, {"exponent", c.exponent}, {"index_set", c.index_set}});
        }
        report.put_payload("decomposition", comps);
    }
    {
        Timer t(report, "gp_tests");
        bool consistent = true;
        json gps = json::array();
        std::set<LinearIdeal> seen;
        for (int mask = 1; mask < (1 << w); ++mask) {
            LinearIdeal pa;
            bool first = true;
            for (int i = 0; i < w; ++i)
                if (mask & (1 << i)) {
                    pa = first ? ideals[i] : pa.sum(ideals[i]);
                    first = false;
                }
            if (!seen.insert(pa).second) continue;
            auto rep = gp_tests(ideals, pa, gb);
            if (!rep.consistent) consistent = false;
            gps.push_back({{"rank", pa.rank()},
                           {"gp_connected", rep.gp_connected},
                           {"split", rep.split_criterion},
                           {"associated", rep.is_associated}});
        }
        consistent ? report.pass("gp_consistency") : report.fail("gp_consistency");
        report.put_payload("gp_tests", gps);
    }
    if (opt.tmax >= 2) {
        // open-question evidence: associated primes of I versus I^2 among the
        // candidate primes P_A; recorded, nothing asserted
        Timer t(report, "ass_stability");
        json data = json::array();
        std::vector<LinearIdeal> doubled = ideals;
        for (const auto& p : ideals) doubled.push_back(p);
        std::set<LinearIdeal> seen;
        for (int mask = 1; mask < (1 << w); ++mask) {
            LinearIdeal pa;
            bool first = true;
            for (int i = 0; i < w; ++i)
                if (mask & (1 << i)) {
                    pa = first ? ideals[i] : pa.sum(ideals[i]);
                    first = false;
                }
            if (!seen.insert(pa).second) continue;
            bool a1 = linforms_is_associated(ideals, pa, gb);
            bool a2 = linforms_is_associated(doubled, pa, gb);
            data.push_back({{"rank", pa.rank()}, {"ass_I", a1}, {"ass_I2", a2}});
        }
        report.put_payload("ass_stability", data);
    }
}

void run_northeast(Report& report, const json& payload, const CliOptions& opt) {
    NortheastSpec spec = load_northeast(payload, opt);
    RingPtr ring = spec.matrix_ring(field_from_string(opt.field));
    report.set_bound("n", spec.n);
    report.set_bound("tmax", opt.tmax);
    GBOptions gb = opt.gb();
    int w = static_cast<int>(spec.pairs.size());
    {
        Timer t(report, "initial_ideals");
        bool all = true;
        for (const auto& [tt, aa] : spec.pairs) {
            auto I = ne_minor_ideal(ring, tt, aa);
            MonomialIdeal ini(ring, I.initial_monomials(MonomialOrder::lex(), gb));
            if (ini != ne_diagonal_ideal(ring, tt, aa)) all = false;
        }
        all ? report.pass("ini_equals_diagonal") : report.fail("ini_equals_diagonal");
    }
    {
        Timer t(report, "linear_products");
        bool all = true;
        std::string why;
        for (const auto& h : exponent_vectors(w, opt.tmax)) {
            PolyIdeal prod(ring, {Polynomial::constant(ring, ring->cone())});
            MonomialIdeal jprod = MonomialIdeal::unit(ring);
            for (int i = 0; i < w; ++i) {
                auto [tt, aa] = spec.pairs[i];
                prod = ideal_product(prod, ideal_power(ne_minor_ideal(ring, tt, aa), h[i]));
                jprod = mi_product(jprod, mi_power(ne_diagonal_ideal(ring, tt, aa), h[i]));
            }
            auto vi = has_linear_resolution(prod, gb);
            auto vj = has_linear_resolution(jprod);
            if (!vi.linear || !vj.linear) {
                all = false;
                why = vi.linear ? vj.diagnostic : vi.diagnostic;
            }
        }
        all ? report.pass("linear_products") : report.fail("linear_products", why);
    }
    {
        Timer t(report, "decomposition");
        auto dec = ne_decompose(spec, gb);
        json exps = json::array();
        for (const auto& [ub, e] : dec.exponents)
            exps.push_back({{"u", ub.first}, {"b", ub.second}, {"e", e}});
        report.put_payload("exponents", exps);
        dec.minor_side_equal ? report.pass("decomposition_minors")
                             : report.fail("decomposition_minors");
        dec.diagonal_side_equal ? report.pass("decomposition_diagonals")
                                : report.fail("decomposition_diagonals");
    }
    {
        Timer t(report, "sagbi");
        rees_sagbi_check(spec, gb) ? report.pass("rees_sagbi") : report.fail("rees_sagbi");
    }
}

Report run_check(const std::string& path, const CliOptions& opt) {
    json inst = load_json(path);
    Report report(path);
    if (!inst.contains("family")) {
        report.skip("family", "no family key: nothing to check");
        return report;
    }
    std::string family = inst.at("family").get<std::string>();
    const json& payload = inst.at("payload");
    if (family == "polymatroidal")
        run_polymatroidal(report, payload, opt);
    else if (family == "linear_forms")
        run_linear_forms(report, payload, opt);
    else if (family == "northeast")
        run_northeast(report, payload, opt);
    else
        throw Error("unknown family: " + family);
    return report;
}

Report run_rees(const std::string& path, const CliOptions& opt, bool tally, bool elim,
                bool hpoly, int normality) {
    json inst = load_json(path);
    json payload = inst.contains("payload") ? inst.at("payload") : inst;
    std::vector<MonomialIdeal> ideals;
    if (payload.contains("generators")) {
        json wrapped;
        wrapped["ring"] = payload.at("ring");
        wrapped["ideals"] = json::array({payload.at("generators")});
        ideals = load_monomial_ideals(wrapped, opt);
    } else {
        ideals = load_monomial_ideals(payload, opt);
    }
    Report report(path);
    report.set_bound("t_bound", opt.bound);
    report.set_bound("x_bound", opt.xbound);
    auto pres = rees_present(ideals);
    {
        json pj;
        pj["ideals"] = json::array();
        for (const auto& ideal : ideals) pj["ideals"].push_back(monomial_ideal_to_json(ideal));
        pj["generators"] = pres.ambient->var_names();
        json grading = json::array();
        for (int i = 0; i < pres.ambient->nvars(); ++i)
            grading.push_back(pres.ambient->var_degree(i));
        pj["grading"] = grading;
        report.put_payload("presentation", pj);
    }
    DegreewiseResult dw;
    {
        Timer t(report, "degreewise");
        dw = rees_defining_degreewise(pres, opt.bound, opt.xbound);
        report.pass("degreewise_computed");
    }
    if (tally) report.put_payload("tally", dw.tally.to_json());
    report.put_payload("fiber_type_within_window",
                       is_fiber_type(pres, dw.generators));
    if (elim || hpoly) {
        Timer t(report, "elimination");
        try {
            PolyIdeal def = rees_defining_ideal(pres, opt.gb());
            auto tally2 = tally_of_generators(pres, def.gens());
            if (elim) {
                // compare within the degreewise window
                DegreeTally windowed;
                for (const auto& [d, c] : tally2.full) {
                    int tdeg = 0;
                    for (std::size_t i = 1; i < d.size(); ++i) tdeg += d[i];
                    if (tdeg <= opt.bound && d[0] <= opt.xbound) {
                        windowed.full[d] = c;
                        windowed.collapsed[{d[0], tdeg}] += c;
                    }
                }
                windowed == dw.tally ? report.pass("tallies_agree")
                                     : report.fail("tallies_agree");
            }
            if (hpoly) {
                auto hs =
                    rees_hilbert_series(pres, def, pres.ambient->default_order(), opt.gb());
                auto [h, pow] = hs.h_polynomial();
                json hj = json::array();
                for (const auto& c : h) hj.push_back(c.get_str());
                report.put_payload("h_polynomial", hj);
                report.put_payload("h_denominator_power", pow);
                report.put_payload("h_has_negative_coefficient",
                                   hs.h_has_negative_coefficient());
            }
        } catch (const BudgetError& e) {
            // elimination over budget: the degreewise result stands
            if (elim)
                report.skip("tallies_agree",
                            "elimination budget exhausted after " +
                                std::to_string(e.steps) + " steps");
            if (hpoly) report.skip("h_polynomial", "elimination budget exhausted");
        }
    }
    if (normality > 0) {
        Timer t(report, "normality");
        auto ev = normality_evidence(ideals, normality);
        ev.all_closed ? report.pass("products_integrally_closed")
                      : report.fail("products_integrally_closed");
    }
    return report;
}

Report run_betti(const std::string& path, const CliOptions& opt) {
    json inst = load_json(path);
    json payload = inst.contains("payload") ? inst.at("payload") : inst;
    json rj = payload.at("ring");
    override_field(rj, opt.field);
    RingPtr ring = ring_from_json(rj);
    Report report(path);
    BettiTable table;
    LinearVerdict verdict;
    if (payload.contains("generators")) {
        std::vector<Monomial> ms;
        bool monomial = true;
        std::vector<Polynomial> polys;
        for (const auto& s : payload.at("generators")) {
            Polynomial p = parse_polynomial(s.get<std::string>(), ring);
            polys.push_back(p);
            if (!p.is_monomial() || !p.leading().coeff.is_one()) monomial = false;
        }
        Timer t(report, "betti");
        if (monomial) {
            for (const auto& p : polys) ms.push_back(p.leading().mono);
            MonomialIdeal ideal(ring, ms);
            table = betti_upper_koszul(ideal);
            verdict = has_linear_resolution(ideal);
        } else {
            PolyIdeal ideal(ring, polys);
            table = betti_ideal(ideal, opt.gb());
            verdict = has_linear_resolution(ideal, opt.gb());
        }
    } else {
        throw Error("betti needs a generators list");
    }
    report.put_payload("betti", table.to_json());
    report.put_payload("reg", table.empty() ? 0 : table.reg_total());
    verdict.linear ? report.pass("linear_resolution")
                   : report.fail("linear_resolution", verdict.diagnostic);
    return report;
}

Report run_sagbi(const std::string& path, const CliOptions& opt) {
    json inst = load_json(path);
    json payload = inst.contains("payload") ? inst.at("payload") : inst;
    Report report(path);
    SagbiInstance si;
    if (payload.contains("northeast")) {
        NortheastSpec spec;
        spec.n = payload["northeast"].at("n").get<int>();
        for (const auto& p : payload["northeast"].at("pairs"))
            spec.pairs.push_back({p.at(0).get<int>(), p.at(1).get<int>()});
        si = northeast_rees_instance(spec, opt.gb());
    } else {
        json rj = payload.at("ring");
        override_field(rj, opt.field);
        RingPtr ring = ring_from_json(rj);
        std::vector<Polynomial> gens;
        for (const auto& s : payload.at("generators"))
            gens.push_back(parse_polynomial(s.get<std::string>(), ring));
        std::string oname = payload.value("order", "degrevlex");
        MonomialOrder ord = oname == "lex" ? MonomialOrder::lex() : MonomialOrder::degrevlex();
        si = make_sagbi_instance(ring, ord, gens, opt.gb());
    }
    Timer t(report, "sagbi");
    auto cert = is_sagbi(si, opt.gb());
    cert.verdict ? report.pass("sagbi") : report.fail("sagbi");
    json traces = json::array();
    for (const auto& [b, trace] : cert.traces) {
        json steps = json::array();
        for (const auto& s : trace)
            steps.push_back({{"exponents", s.exponents}, {"coeff", s.coeff.str()}});
        traces.push_back({{"binomial", b}, {"trace", steps}});
    }
    report.put_payload("certificate", traces);
    if (cert.verdict) {
        auto lift = gb_lift_check(si, opt.gb());
        lift.verdict ? report.pass("groebner_lift") : report.fail("groebner_lift");
    }
    return report;
}

Report run_decompose(const std::string& path, const CliOptions& opt) {
    json inst = load_json(path);
    Report report(path);
    std::string family = inst.at("family").get<std::string>();
    const json& payload = inst.at("payload");
    GBOptions gb = opt.gb();
    if (family == "polymatroidal") {
        auto ideals = load_monomial_ideals(payload, opt);
        MonomialIdeal prod = MonomialIdeal::unit(ideals.front().ring());
        for (const auto& ideal : ideals) prod = mi_product(prod, ideal);
        auto dec = polymatroid_decompose(prod);
        dec.equals_ideal ? report.pass("decomposition") : report.fail("decomposition");
        report.put_payload("decomposition", decomposition_json(dec));
    } else if (family == "linear_forms") {
        auto ideals = load_linear_ideals(payload, opt);
        auto dec = linforms_decompose(ideals, gb);
        dec.equals_product ? report.pass("decomposition") : report.fail("decomposition");
    } else if (family == "northeast") {
        NortheastSpec spec = load_northeast(payload, opt);
        auto dec = ne_decompose(spec, gb);
        json exps = json::array();
        for (const auto& [ub, e] : dec.exponents)
            exps.push_back({{"u", ub.first}, {"b", ub.second}, {"e", e}});
        report.put_payload("exponents", exps);
        dec.minor_side_equal ? report.pass("decomposition_minors")
                             : report.fail("decomposition_minors");
        dec.diagonal_side_equal ? report.pass("decomposition_diagonals")
                                : report.fail("decomposition_diagonals");
        auto irr = ne_irredundant(spec, gb);
        report.put_payload("refinement", {{"extra", irr.extra},
                                          {"proviso", irr.proviso},
                                          {"irredundant", irr.irredundant}});
        irr.equals_ideal ? report.pass("refined_decomposition")
                         : report.fail("refined_decomposition");
    } else {
        throw Error("unknown family: " + family);
    }
    return report;
}

int emit(Report report, const CliOptions& opt) {
    report.set_bound("budget_steps", static_cast<int>(opt.budget));
    if (opt.field != "q" && opt.field != "Q")
        report.put_payload("field_note",
                           "prime-field run (" + opt.field + "): probabilistic evidence only");
    if (opt.emit_json)
        std::cout << report.to_json(!opt.no_timings).dump(2) << "\n";
    else
        std::cout << report.text();
    return report.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"linprod: products of ideals with linear resolutions"};
    app.require_subcommand(1);
    CliOptions opt;
    std::string file;
    bool tally = false, elim = false, hpoly = false;
    int normality = 0;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("file", file, "instance JSON file")->required();
        cmd->add_option("--budget", opt.budget, "reduction step budget");
        cmd->add_option("--field", opt.field, "coefficient field: q or p:<prime>");
        cmd->add_flag("--json", opt.emit_json, "emit the JSON report");
        cmd->add_flag("--no-timings", opt.no_timings, "omit timings from JSON");
    };

    auto* check = app.add_subcommand("check", "run the family verification battery");
    add_common(check);
    check->add_option("--tmax", opt.tmax, "bound on the product exponent |h|");
    check->add_option("--n", opt.n_override, "override the matrix size");

    auto* rees = app.add_subcommand("rees", "multi-Rees presentation and tally");
    add_common(rees);
    rees->add_option("--bound", opt.bound, "T-degree bound for the degreewise method");
    rees->add_option("--xbound", opt.xbound, "x-degree scan bound");
    rees->add_flag("--tally", tally, "report the generator tally");
    rees->add_flag("--elim", elim, "cross-check against the elimination method");
    rees->add_flag("--hpoly", hpoly, "h-polynomial of the initial defining ideal");
    rees->add_option("--normality", normality, "integral-closure evidence up to |h|");

    auto* betti = app.add_subcommand("betti", "Betti table and linear-resolution verdict");
    add_common(betti);

    auto* sagbi = app.add_subcommand("sagbi", "Sagbi verification with certificates");
    add_common(sagbi);

    auto* decompose = app.add_subcommand("decompose", "primary decomposition reports");
    add_common(decompose);
    decompose->add_option("--n", opt.n_override, "override the matrix size");

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) return emit(run_check(file, opt), opt);
        if (rees->parsed()) return emit(run_rees(file, opt, tally, elim, hpoly, normality), opt);
        if (betti->parsed()) return emit(run_betti(file, opt), opt);
        if (sagbi->parsed()) return emit(run_sagbi(file, opt), opt);
        if (decompose->parsed()) return emit(run_decompose(file, opt), opt);
    } catch (const BudgetError& e) {
        std::cerr << "budget exhausted: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 3;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
