#pragma once

#include <map>

#include "linprod/polynomial.hpp"

namespace linprod {

struct GBOptions {
    long step_budget = 1'000'000;  // reduction steps before BudgetError
};

// Reduced Groebner basis: autoreduced, monic, unique for the order.
std::vector<Polynomial> buchberger(std::vector<Polynomial> gens, const MonomialOrder& ord,
                                   const GBOptions& opts = {});

// Full normal form (every term reduced).
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       const MonomialOrder& ord);

// Quotient of an exact division g = q*f; throws if the division leaves a
// remainder.
Polynomial exact_divide(const Polynomial& g, const Polynomial& f);

// Homogeneous ideal with per-order cached reduced bases.
class PolyIdeal {
public:
    PolyIdeal() = default;
    PolyIdeal(RingPtr ring, std::vector<Polynomial> gens);

    static PolyIdeal zero(RingPtr ring) { return PolyIdeal(std::move(ring), {}); }

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& gens() const { return gens_; }
    bool is_zero_ideal() const { return gens_.empty(); }

    const std::vector<Polynomial>& basis(const MonomialOrder& ord,
                                         const GBOptions& opts = {}) const;
    const std::vector<Polynomial>& basis() const { return basis(ring_->default_order()); }

    bool contains(const Polynomial& f, const GBOptions& opts = {}) const;
    bool contains_ideal(const PolyIdeal& other, const GBOptions& opts = {}) const;
    // Leading monomials of the reduced basis, as a monomial ideal generator list.
    std::vector<Monomial> initial_monomials(const MonomialOrder& ord,
                                            const GBOptions& opts = {}) const;

private:
    RingPtr ring_;
    std::vector<Polynomial> gens_;
    mutable std::map<std::string, std::vector<Polynomial>> cache_;
};

bool ideal_equal(const PolyIdeal& a, const PolyIdeal& b, const GBOptions& opts = {});

// Drop generators lying in the ideal spanned by the others (homogeneous
// input); the survivors minimally generate.
std::vector<Polynomial> minimalize_generators(std::vector<Polynomial> gens,
                                              const GBOptions& opts = {});

}  // namespace linprod
