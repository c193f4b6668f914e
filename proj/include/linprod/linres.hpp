#pragma once

#include "linprod/monideal.hpp"
#include "linprod/resolution.hpp"

namespace linprod {

// Betti table of the ideal (k = 0 holds generator degrees).
BettiTable betti_ideal(const PolyIdeal& ideal, const GBOptions& opts = {});
inline BettiTable betti_ideal(const MonomialIdeal& ideal) { return betti_upper_koszul(ideal); }

// Table of R/I: beta_{0,0} = 1 and the ideal table shifted by one index.
BettiTable betti_quotient_from_ideal(const BettiTable& ideal_table, int grading_width);

// Castelnuovo-Mumford regularity of the ideal (total grading);
// reg(0) = 0 and reg(R) = 0 conventions.
int regularity(const PolyIdeal& ideal, const GBOptions& opts = {});
int regularity(const MonomialIdeal& ideal);

struct LinearVerdict {
    bool linear = false;
    int degree = -1;         // generator degree when equigenerated
    std::string diagnostic;  // set when not linear
};

LinearVerdict has_linear_resolution(const MonomialIdeal& ideal);
LinearVerdict has_linear_resolution(const PolyIdeal& ideal, const GBOptions& opts = {});
LinearVerdict linear_verdict_from_table(const BettiTable& table, int d);

BettiTable resolution_betti(const FreeResolution& res);

// ---- truncated reg_0 of a multigraded presentation ----

// Presentation of M = S/relations over a Z^{w+1}-graded polynomial ring S
// whose first `nbase` variables have degree e_0 and whose remaining
// variables have pure T-degrees.  When `fine` is set the relations must be
// fine-homogeneous (binomials from a monomial Rees/fiber presentation) and
// homology is computed per fine multidegree.
struct GradedPresentation {
    RingPtr ambient;
    int nbase = 0;
    std::vector<Polynomial> relations;
    bool fine = false;
    // fine mode only: base-ring exponent of the image of each non-base variable
    std::vector<Monomial> z_images;
};

struct Reg0Witness {
    int k;
    MultiDegree degree;  // (x-degree, T-part)
    int dim;
};

struct Reg0Certificate {
    int reg0 = 0;     // max over scanned window of (x-degree - k), at least 0
    int t_bound = 0;  // |h| <= t_bound scanned
    int x_bound = 0;  // x-degree <= x_bound scanned
    std::vector<Reg0Witness> tor;  // all nonzero Tor pieces found
    nlohmann::json to_json() const;
};

// Tor_k(K, S/relations) at every multidegree (j, h) with |h| <= t_bound and
// j <= x_bound, by exact linear algebra on the Koszul complex of the
// ambient variables.  Reports max (j - k) over nonzero pieces.
Reg0Certificate reg0_truncated(const GradedPresentation& pres, int t_bound, int x_bound);

// reg(product) <= (sum d_i h_i) + reg0; both sides computed.  Whether some
// exponent attains the bound is recorded, never asserted.
struct RomerReport {
    bool holds = false;
    int reg_product = 0;
    int bound = 0;  // d.h + reg0
    bool attained = false;
};

RomerReport romer_bound_check(const std::vector<MonomialIdeal>& ideals,
                              const std::vector<int>& h, const Reg0Certificate& cert);

}  // namespace linprod
