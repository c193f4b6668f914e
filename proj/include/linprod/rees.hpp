#pragma once

#include "linprod/linres.hpp"
#include "linprod/monideal.hpp"

namespace linprod {

// Presentation data of the multi-Rees algebra R(I_1..I_w): ambient
// S = R[Z_{i,j}] carries the Z^{w+1} grading deg x = e0, deg Z_{i,j} = e_i.
struct ReesPresentation {
    RingPtr base;                                // R, standard graded
    std::vector<std::vector<Polynomial>> gens;   // f_{i,1..m_i}, equigenerated
    std::vector<int> degrees;                    // d_i
    bool monomial = false;                       // every generator a monomial
    RingPtr ambient;                             // S
    int nbase = 0;

    int nfactors() const { return static_cast<int>(gens.size()); }
    // ambient index of Z_{i,j}
    int zvar(int i, int j) const;
    // base-ring image monomial per Z variable (monomial presentations)
    std::vector<Monomial> z_image_monomials() const;
};

ReesPresentation rees_present(const std::vector<MonomialIdeal>& ideals);
ReesPresentation rees_present(const std::vector<PolyIdeal>& ideals, const GBOptions& opts = {});

// Defining ideal by elimination of the T variables from the graph ideal in
// R[T, Z]; exact and complete.
PolyIdeal rees_defining_ideal(const ReesPresentation& pres, const GBOptions& opts = {});

// counts of minimal generators, collapsed to (x-degree, total T-degree)
struct DegreeTally {
    std::map<std::pair<int, int>, int> collapsed;
    std::map<MultiDegree, int> full;
    bool operator==(const DegreeTally& o) const { return full == o.full; }
    nlohmann::json to_json() const;
};

DegreeTally tally_of_generators(const ReesPresentation& pres,
                                const std::vector<Polynomial>& gens);

// Minimal generators of the defining ideal computed multidegree by
// multidegree, restricted to total T-degree <= t_bound and x-degree <=
// x_bound.  For monomial presentations the computation splits into
// single-image fibers; otherwise exact linear algebra on graded pieces.
struct DegreewiseResult {
    std::vector<Polynomial> generators;  // in the ambient ring
    DegreeTally tally;
    int t_bound = 0, x_bound = 0;
};

DegreewiseResult rees_defining_degreewise(const ReesPresentation& pres, int t_bound,
                                          int x_bound);

// Kernel of K[Z] -> R, Z_{i,j} -> f_{i,j} (the multi-fiber ring relations),
// in the subring of the ambient generated by the Z variables.
PolyIdeal fiber_defining_ideal(const ReesPresentation& pres, const GBOptions& opts = {});

// Every minimal generator is linear in the Z variables (symmetric-algebra
// relation) or free of the base variables (fiber relation).
bool is_fiber_type(const ReesPresentation& pres, const std::vector<Polynomial>& minimal_gens);

struct InitialCriterion {
    bool all_linear_in_x = false;
    bool all_quadratic = false;
    std::vector<Monomial> initial_gens;  // minimal generators of the initial ideal
};

// Classify the minimal generators of ini_ord(defining): all at most linear
// in the first `nbase` (base-ring) variables, and all quadratic.
InitialCriterion initial_criterion(const PolyIdeal& defining, int nbase,
                                   const MonomialOrder& ord, const GBOptions& opts = {});
inline InitialCriterion initial_criterion(const ReesPresentation& pres,
                                          const PolyIdeal& defining, const MonomialOrder& ord,
                                          const GBOptions& opts = {}) {
    return initial_criterion(defining, pres.nbase, ord, opts);
}

struct NormalityEvidence {
    bool all_closed = true;
    std::vector<std::pair<std::vector<int>, bool>> per_power;  // (h, closed?)
};

NormalityEvidence normality_evidence(const std::vector<MonomialIdeal>& ideals, int hmax);

// Hilbert series of S/ini(defining ideal) in the total grading.
HilbertSeries rees_hilbert_series(const ReesPresentation& pres, const PolyIdeal& defining,
                                  const MonomialOrder& ord, const GBOptions& opts = {});

// Presentation for reg0_truncated: relations from the degreewise method
// (monomial, fine-graded) or a supplied defining ideal.
GradedPresentation to_graded_presentation(const ReesPresentation& pres,
                                          const std::vector<Polynomial>& relations);

}  // namespace linprod
