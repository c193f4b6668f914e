#pragma once

#include <optional>

#include "linprod/betti.hpp"
#include "linprod/groebner.hpp"

namespace linprod {

// Monomial ideal held by its minimal generators, sorted ascending under the
// ring's default order.
class MonomialIdeal {
public:
    MonomialIdeal() = default;
    MonomialIdeal(RingPtr ring, std::vector<Monomial> gens);

    static MonomialIdeal zero(RingPtr ring) { return MonomialIdeal(std::move(ring), {}); }
    static MonomialIdeal unit(RingPtr ring) {
        auto r = ring;
        return MonomialIdeal(std::move(ring), {Monomial(r->nvars())});
    }

    const RingPtr& ring() const { return ring_; }
    const std::vector<Monomial>& gens() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }

    bool contains(const Monomial& m) const;
    bool contains(const MonomialIdeal& other) const;
    bool operator==(const MonomialIdeal& o) const { return gens_ == o.gens_; }
    bool operator!=(const MonomialIdeal& o) const { return !(*this == o); }

    // Common generator degree, or -1 when not equigenerated (or zero ideal).
    int equigenerated_degree() const;
    Monomial lcm_of_gens() const;
    PolyIdeal to_poly_ideal() const;
    std::string str() const;

private:
    RingPtr ring_;
    std::vector<Monomial> gens_;
};

MonomialIdeal mi_sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal mi_product(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal mi_power(const MonomialIdeal& a, int k);
MonomialIdeal mi_intersect(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal mi_colon(const MonomialIdeal& a, const Monomial& m);
MonomialIdeal mi_colon_ideal(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal mi_saturate(const MonomialIdeal& a, const MonomialIdeal& b);

bool is_strongly_stable(const MonomialIdeal& ideal);
// Smallest strongly stable ideal containing u, as the product of powers of
// the nested variable ideals.
MonomialIdeal principal_borel(const RingPtr& ring, const Monomial& u);

bool is_polymatroidal(const MonomialIdeal& ideal);
// Factorization into ideals of variables when the ideal is transversal;
// searched exhaustively up to the degree cap.
std::optional<std::vector<std::vector<int>>> transversal_presentation(const MonomialIdeal& ideal,
                                                                      int degree_cap = 6);

// Candidates are enumerated up to `degree_bound` (default: the largest
// generator degree) inside the componentwise box of the generator lcm.
MonomialIdeal integral_closure(const MonomialIdeal& ideal, int degree_bound = -1);
bool is_integrally_closed(const MonomialIdeal& ideal);

// Monomial prime = sorted list of variable indices.
using MonomialPrime = std::vector<int>;

struct PrimaryComponent {
    MonomialPrime prime;
    MonomialIdeal component;
};

// Irredundant monomial primary decomposition by splitting on a mixed
// generator; components with equal radical are merged first.
std::vector<PrimaryComponent> primary_decomposition(const MonomialIdeal& ideal);
std::vector<MonomialPrime> associated_primes(const MonomialIdeal& ideal);

// Substitute 1 for the variables outside P (same ring).
MonomialIdeal restrict_to_prime(const MonomialIdeal& ideal, const MonomialPrime& p);

struct HilbertSeries {
    std::vector<mpz_class> numerator;  // coefficients of t^0, t^1, ...
    int denominator_power = 0;         // (1-t)^n

    // after cancelling all (1-t) factors: {h-polynomial, remaining power}
    std::pair<std::vector<mpz_class>, int> h_polynomial() const;
    bool h_has_negative_coefficient() const;
    // expand the series and return the coefficient of t^d
    mpz_class series_coefficient(int d) const;
};

// Hilbert series of R/I.
HilbertSeries hilbert_series(const MonomialIdeal& ideal);

// Multigraded Betti numbers of the ideal from reduced simplicial homology
// of the upper Koszul complexes, collapsed to the ring grading.
BettiTable betti_upper_koszul(const MonomialIdeal& ideal);
// Eliahou-Kervaire table; requires a strongly stable ideal.
BettiTable eliahou_kervaire_betti(const MonomialIdeal& ideal);

// JSON schema {ring, generators:[string]}
MonomialIdeal monomial_ideal_from_json(const nlohmann::json& j);
nlohmann::json monomial_ideal_to_json(const MonomialIdeal& ideal);

}  // namespace linprod
