#include "doctest.h"

#include <set>

#include "linprod/linalg.hpp"
#include "linprod/sagbi.hpp"
#include "test_util.hpp"

using namespace linprod;
using namespace linprod::testutil;

namespace {

std::vector<Polynomial> parse_all(const RingPtr& R, const std::vector<std::string>& ss) {
    std::vector<Polynomial> out;
    for (const auto& s : ss) out.push_back(parse_polynomial(s, R));
    return out;
}

}  // namespace

TEST_CASE("subduction basics on {x+y, xy}") {
    auto R = Ring::make({"x", "y"});
    auto inst = make_sagbi_instance(R, MonomialOrder::lex(),
                                    parse_all(R, {"x + y", "x*y"}));
    // generator itself
    CHECK(subduct(inst.gens[0], inst).remainder.is_zero());
    // algebra membership: e1^2 - 4 e2 = (x-y)^2
    auto g = parse_polynomial("x^2 - 2*x*y + y^2", R);
    CHECK(subduct(g, inst).remainder.is_zero());
    // x subducts to -y, whose leading monomial is outside the monoid
    auto r = subduct(parse_polynomial("x", R), inst);
    CHECK(r.remainder == parse_polynomial("0 - y", R));
    // kernel of the monomial map x, xy is trivial: vacuously Sagbi
    CHECK(inst.kernel_psi.is_zero_ideal());
    CHECK(is_sagbi(inst).verdict);
}

TEST_CASE("pure monomial generators are always Sagbi") {
    auto R = Ring::make({"x", "y"});
    auto inst = make_sagbi_instance(R, MonomialOrder::degrevlex(),
                                    parse_all(R, {"x^2", "x*y", "y^2"}));
    auto cert = is_sagbi(inst);
    CHECK(cert.verdict);
    // B = {W2^2 - W1 W3} is a Groebner basis; the lift is itself
    auto rep = gb_lift_check(inst);
    CHECK(rep.b_is_groebner);
    CHECK(rep.lifted_is_groebner);
    CHECK(rep.verdict);
}

TEST_CASE("a generating set that is not a Sagbi basis") {
    auto R = Ring::make({"x", "y"});
    auto inst = make_sagbi_instance(R, MonomialOrder::lex(),
                                    parse_all(R, {"x", "x*y - y^2", "x*y^2"}));
    auto cert = is_sagbi(inst);
    CHECK_FALSE(cert.verdict);
    CHECK_FALSE(cert.failures.empty());
}

TEST_CASE("lattice shortcut matches elimination for the toric kernel") {
    auto R = Ring::make({"x", "y"});
    auto a = make_sagbi_instance(R, MonomialOrder::degrevlex(),
                                 parse_all(R, {"x^2", "x*y", "y^2"}), {}, false);
    auto b = make_sagbi_instance(R, MonomialOrder::degrevlex(),
                                 parse_all(R, {"x^2", "x*y", "y^2"}), {}, true);
    CHECK(ideal_equal(a.kernel_psi, b.kernel_psi));
}

TEST_CASE("initial monomials of generator products lie in the initial algebra") {
    auto R = Ring::make({"x", "y"});
    auto inst = make_sagbi_instance(R, MonomialOrder::lex(),
                                    parse_all(R, {"x + y", "x*y", "x^2*y - y^2"}));
    std::mt19937 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        Polynomial prod = Polynomial::constant(R, R->cone());
        Monomial expected(R->nvars());
        for (std::size_t i = 0; i < inst.gens.size(); ++i) {
            int c = rng() % 3;
            for (int k = 0; k < c; ++k) {
                prod *= inst.gens[i];
                expected = expected * inst.leads[i];
            }
        }
        if (prod.is_constant()) continue;
        CHECK(prod.leading(inst.order).mono == expected);
    }
}

TEST_CASE("Rees generators of a northeast instance form a Sagbi basis") {
    NortheastSpec spec{3, {{2, 1}}};
    auto inst = northeast_rees_instance(spec);
    auto cert = is_sagbi(inst);
    CHECK(cert.verdict);
    // ideal-of-variables instance: monomial generators, trivially Sagbi
    NortheastSpec trivial{3, {{1, 1}}};
    CHECK(rees_sagbi_check(trivial));
}

TEST_CASE("lifted binomial from the 2-minor Rees instance is a kernel element") {
    NortheastSpec spec{3, {{2, 1}}};
    auto inst = northeast_rees_instance(spec);
    auto cert = is_sagbi(inst);
    REQUIRE(cert.verdict);
    // every lifted element maps to zero under Phi
    for (const auto& lifted : cert.lifted) {
        Polynomial image = Polynomial::zero(inst.ring);
        for (const auto& t : lifted.terms()) {
            Polynomial prod = Polynomial::constant(inst.ring, t.coeff);
            for (int i = 0; i < inst.zring->nvars(); ++i)
                for (int k = 0; k < t.mono.exp(i); ++k) prod *= inst.gens[i];
            image += prod;
        }
        CHECK(image.is_zero());
    }
}

TEST_CASE("Groebner lift for northeast quadrics") {
    NortheastSpec spec{3, {{2, 1}}};
    auto inst = northeast_rees_instance(spec);
    auto rep = gb_lift_check(inst);
    CHECK(rep.b_is_groebner);
    CHECK(rep.lifted_is_groebner);
    CHECK(rep.verdict);
}

TEST_CASE("Sagbi check for a mixed n=4 instance") {
    NortheastSpec spec{4, {{2, 2}, {1, 1}}};
    CHECK(rees_sagbi_check(spec));
    // cross-check: the diagonal product ideal equals the initial ideal of
    // the minor product
    RingPtr M = Ring::matrix(4, 4);
    PolyIdeal prod = ideal_product(ne_minor_ideal(M, 2, 2), ne_minor_ideal(M, 1, 1));
    MonomialIdeal ini(M, prod.initial_monomials(MonomialOrder::lex()));
    MonomialIdeal jprod =
        mi_product(ne_diagonal_ideal(M, 2, 2), ne_diagonal_ideal(M, 1, 1));
    CHECK(ini == jprod);
}

TEST_CASE("Hilbert function of the algebra matches the initial monoid when Sagbi holds") {
    auto R = Ring::make({"x", "y"});
    auto inst = make_sagbi_instance(R, MonomialOrder::lex(),
                                    parse_all(R, {"x + y", "x*y"}));
    REQUIRE(is_sagbi(inst).verdict);
    std::map<std::vector<int>, int> coord;
    for (int d = 1; d <= 6; ++d) {
        // monoid side: distinct x^a (xy)^b of total degree d
        std::set<std::vector<int>> monoid;
        // algebra side: span of products f1^a f2^b of degree d
        IncrementalSpan span;
        int dim = 0;
        for (int a = 0; a <= d; ++a) {
            for (int b = 0; b <= d; ++b) {
                if (a + 2 * b != d) continue;
                monoid.insert((Monomial::unit_of(2, 0, a) *
                               Monomial(std::vector<int>{b, b}))
                                  .exps());
                Polynomial prod = poly_pow(inst.gens[0], a) * poly_pow(inst.gens[1], b);
                SparseVec v;
                for (const auto& t : prod.terms()) {
                    auto [it, fresh] =
                        coord.try_emplace(t.mono.exps(), static_cast<int>(coord.size()));
                    v.push_back({it->second, t.coeff});
                }
                std::sort(v.begin(), v.end(), [](auto& x, auto& y) { return x.first < y.first; });
                if (span.add(v)) ++dim;
            }
        }
        CHECK(dim == static_cast<int>(monoid.size()));
    }
}
