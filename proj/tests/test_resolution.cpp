#include "doctest.h"

#include "linprod/parse.hpp"
#include "linprod/resolution.hpp"

using namespace linprod;

namespace {

std::vector<Polynomial> parse_all(const RingPtr& R, const std::vector<std::string>& ss) {
    std::vector<Polynomial> out;
    for (const auto& s : ss) out.push_back(parse_polynomial(s, R));
    return out;
}

// beta numbers of the ideal: counts[k][total degree] from shifts[k+1]
std::map<std::pair<int, int>, int> ideal_betti(const FreeResolution& res) {
    std::map<std::pair<int, int>, int> b;
    for (int k = 1; k < static_cast<int>(res.shifts.size()); ++k)
        for (const auto& g : res.shifts[k]) b[{k - 1, total(g)}]++;
    return b;
}

}  // namespace

TEST_CASE("Koszul syzygy of (x, y)") {
    auto R = Ring::make({"x", "y"});
    auto gens = parse_all(R, {"x", "y"});
    auto syz = syzygies(gens);
    auto ord = R->default_order();
    std::vector<MultiDegree> shifts = {MultiDegree{1}, MultiDegree{1}};
    auto min = minimalize_module(syz, shifts, ord);
    REQUIRE(min.size() == 1);
    // the relation y*e1 - x*e2 up to sign and scale
    const VecPoly& s = min[0];
    Polynomial a = s.comp(0), b = s.comp(1);
    CHECK(a * parse_polynomial("x", R) + b * parse_polynomial("y", R) == Polynomial::zero(R));
    CHECK(a.degree() == 1);

    auto res = minimal_resolution(PolyIdeal(R, gens));
    CHECK(res.length() == 2);
    CHECK(res.composes_to_zero());
    CHECK(res.is_minimal());
}

TEST_CASE("square of the maximal ideal in two variables") {
    auto R = Ring::make({"x", "y"});
    auto res = minimal_resolution(PolyIdeal(R, parse_all(R, {"x^2", "x*y", "y^2"})));
    auto b = ideal_betti(res);
    CHECK(b[{0, 2}] == 3);
    CHECK(b[{1, 3}] == 2);
    CHECK(res.length() == 2);
    CHECK(res.composes_to_zero());
    CHECK(res.is_minimal());
}

TEST_CASE("complete intersection (x^2, y^3) has the Koszul resolution") {
    auto R = Ring::make({"x", "y"});
    auto res = minimal_resolution(PolyIdeal(R, parse_all(R, {"x^2", "y^3"})));
    auto b = ideal_betti(res);
    CHECK(b[{0, 2}] == 1);
    CHECK(b[{0, 3}] == 1);
    CHECK(b[{1, 5}] == 1);
    CHECK(res.length() == 2);
    CHECK(res.composes_to_zero());
}

TEST_CASE("resolution ranks reproduce the Hilbert function degreewise") {
    auto R = Ring::make({"x", "y", "z"});
    PolyIdeal I(R, parse_all(R, {"x^2 - y*z", "x*y", "z^3"}));
    auto res = minimal_resolution(I);
    CHECK(res.composes_to_zero());
    CHECK(res.is_minimal());
    // dim_K (R/I)_d from the alternating sum over the resolution of R/I,
    // compared against a direct count of standard monomials
    const auto& gb = I.basis();
    auto count_std = [&](int d) {
        // monomials of degree d in 3 vars not divisible by any leading monomial
        int cnt = 0;
        for (int a = 0; a <= d; ++a)
            for (int b = 0; a + b <= d; ++b) {
                int c = d - a - b;
                Monomial m(std::vector<int>{a, b, c});
                bool div = false;
                for (const auto& g : gb)
                    if (g.leading().mono.divides(m)) div = true;
                if (!div) ++cnt;
            }
        return cnt;
    };
    auto binom = [](int n, int k) {
        if (k < 0 || n < 0) return 0;
        long r = 1;
        for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
        return static_cast<int>(r);
    };
    for (int d = 0; d <= 8; ++d) {
        // alternating sum: dim R_d - sum_k (-1)^k sum_shifts dim R_{d-shift}
        long dim = binom(d + 2, 2);
        int sign = -1;
        for (std::size_t k = 1; k < res.shifts.size(); ++k) {
            for (const auto& g : res.shifts[k]) dim += sign * binom(d - total(g) + 2, 2);
            sign = -sign;
        }
        CHECK(dim == count_std(d));
    }
}
