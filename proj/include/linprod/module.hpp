#pragma once

#include "linprod/groebner.hpp"

namespace linprod {

// Element of a free module R^rank, stored densely by component.
class VecPoly {
public:
    VecPoly() = default;
    VecPoly(RingPtr ring, int rank)
        : ring_(std::move(ring)), comps_(rank, Polynomial(ring_)) {
        for (auto& c : comps_) c = Polynomial::zero(ring_);
    }
    static VecPoly unit(const RingPtr& ring, int rank, int i, Polynomial f) {
        VecPoly v(ring, rank);
        v.comps_[i] = std::move(f);
        return v;
    }

    const RingPtr& ring() const { return ring_; }
    int rank() const { return static_cast<int>(comps_.size()); }
    const Polynomial& comp(int i) const { return comps_[i]; }
    Polynomial& comp(int i) { return comps_[i]; }
    bool is_zero() const {
        for (const auto& c : comps_)
            if (!c.is_zero()) return false;
        return true;
    }

    VecPoly operator+(const VecPoly& o) const;
    VecPoly operator-(const VecPoly& o) const;
    VecPoly mul_term(const Monomial& m, const Coeff& c) const;

    // Common multidegree given the target free module's shifts.
    MultiDegree multidegree(const std::vector<MultiDegree>& shifts) const;

    bool operator==(const VecPoly& o) const { return comps_ == o.comps_; }

private:
    RingPtr ring_;
    std::vector<Polynomial> comps_;
};

struct ModuleGB {
    std::vector<VecPoly> basis;
    // basis[k] == sum_i reps[k][i] * gens[i]
    std::vector<std::vector<Polynomial>> reps;
};

// Groebner basis of a submodule of R^rank under position-over-term order
// (component 0 greatest), with representation tracking.
ModuleGB module_groebner(const std::vector<VecPoly>& gens, const MonomialOrder& ord,
                         const GBOptions& opts = {});

VecPoly module_normal_form(const VecPoly& f, const std::vector<VecPoly>& basis,
                           const MonomialOrder& ord);

bool module_contains(const VecPoly& f, const std::vector<VecPoly>& gens,
                     const MonomialOrder& ord, const GBOptions& opts = {});

// Generators of the syzygy module of `gens` inside R^{gens.size()}.
std::vector<VecPoly> module_syzygies(const std::vector<VecPoly>& gens, const MonomialOrder& ord,
                                     const GBOptions& opts = {});

// Greedy minimal generating selection for homogeneous module generators.
std::vector<VecPoly> minimalize_module(std::vector<VecPoly> gens,
                                       const std::vector<MultiDegree>& shifts,
                                       const MonomialOrder& ord, const GBOptions& opts = {});

}  // namespace linprod
