#pragma once

#include "linprod/module.hpp"

namespace linprod {

// Minimal graded free resolution data: mats[k] maps F_{k+1} -> F_k,
// shifts[k] are the generator degrees of F_k.  For an ideal resolution
// F_0 = R with shift 0 and mats[0] is the row of minimal generators.
struct FreeResolution {
    RingPtr ring;
    std::vector<std::vector<std::vector<Polynomial>>> mats;  // mats[k][row][col]
    std::vector<std::vector<MultiDegree>> shifts;

    int length() const { return static_cast<int>(mats.size()); }
    // Consecutive matrices compose to zero.
    bool composes_to_zero() const;
    // No nonzero constant entry in any matrix past the generator row.
    bool is_minimal() const;
};

// Minimal free resolution of R/I (homogeneous I).
FreeResolution minimal_resolution(const PolyIdeal& ideal, const GBOptions& opts = {});

// Syzygy module generators of a polynomial list (as rank-1 module columns).
std::vector<VecPoly> syzygies(const std::vector<Polynomial>& gens, const GBOptions& opts = {});

}  // namespace linprod
