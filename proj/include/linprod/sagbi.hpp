#pragma once

#include "linprod/families.hpp"

namespace linprod {

// Subalgebra generators f_1..f_m with presentation ring K[Z_1..Z_m], the
// monomial map Psi (Z_i -> ini f_i) and its toric kernel.
struct SagbiInstance {
    RingPtr ring;
    MonomialOrder order = MonomialOrder::degrevlex();
    std::vector<Polynomial> gens;
    std::vector<Monomial> leads;
    RingPtr zring;
    PolyIdeal kernel_psi;  // binomial ideal in zring
};

// `lattice_shortcut` computes Ker Psi from an integer kernel basis saturated
// by the product of the Z variables instead of graph elimination.
SagbiInstance make_sagbi_instance(RingPtr ring, MonomialOrder order,
                                  std::vector<Polynomial> gens, const GBOptions& opts = {},
                                  bool lattice_shortcut = false);

struct SubductionStep {
    std::vector<int> exponents;  // c with prod f_i^{c_i}
    Coeff coeff;                 // subtracted lambda
};

struct SubductionResult {
    Polynomial remainder;
    std::vector<SubductionStep> trace;
};

// Subtract lambda * prod f^c matching the leading monomial while it lies in
// the monoid generated by the ini(f_i); ties broken by the lexicographically
// smallest exponent vector.
SubductionResult subduct(const Polynomial& g, const SagbiInstance& inst,
                         long step_budget = 100000);

struct SagbiCertificate {
    bool verdict = false;
    // per kernel binomial: the lifted element b - sum lambda_i Z^{c_i} (in
    // Ker Phi when the verdict holds)
    std::vector<Polynomial> lifted;
    std::vector<std::string> failures;  // binomials whose subduction left a remainder
    // per binomial: the subduction trace (subtracted products)
    std::vector<std::pair<std::string, std::vector<SubductionStep>>> traces;
};

SagbiCertificate is_sagbi(const SagbiInstance& inst, const GBOptions& opts = {});

// Sagbi verification for the Rees generators {x_ij} + {minor * T_i} of a
// northeast family under the diagonal order; true certifies that the initial
// algebra of the multi-Rees algebra is the multi-Rees algebra of the
// diagonal ideals.
bool rees_sagbi_check(const NortheastSpec& spec, const GBOptions& opts = {});

// The Rees Sagbi instance itself, for callers that also want the lifted
// Groebner data.
SagbiInstance northeast_rees_instance(const NortheastSpec& spec, const GBOptions& opts = {});

struct GbLiftReport {
    bool b_is_groebner = false;      // precondition: B a GB of Ker Psi
    bool lifted_is_groebner = false;  // lifted elements a GB under the lifted order
    bool verdict = false;
};

GbLiftReport gb_lift_check(const SagbiInstance& inst, const GBOptions& opts = {});

// All S-pairs of `gens` reduce to zero against `gens` under `ord`.
bool is_groebner_basis(const std::vector<Polynomial>& gens, const MonomialOrder& ord,
                       const GBOptions& opts = {});

}  // namespace linprod
