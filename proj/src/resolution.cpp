#include "linprod/resolution.hpp"

namespace linprod {

bool FreeResolution::composes_to_zero() const {
    for (int k = 0; k + 1 < length(); ++k) {
        const auto& a = mats[k];
        const auto& b = mats[k + 1];
        if (a.empty() || b.empty()) continue;
        std::size_t rows = a.size(), mid = b.size(), cols = b[0].size();
        for (std::size_t r = 0; r < rows; ++r) {
            for (std::size_t c = 0; c < cols; ++c) {
                Polynomial s = Polynomial::zero(ring);
                for (std::size_t m = 0; m < mid; ++m) s += a[r][m] * b[m][c];
                if (!s.is_zero()) return false;
            }
        }
    }
    return true;
}

bool FreeResolution::is_minimal() const {
    for (int k = 1; k < length(); ++k)
        for (const auto& row : mats[k])
            for (const auto& e : row)
                if (!e.is_zero() && e.is_constant()) return false;
    return true;
}

FreeResolution minimal_resolution(const PolyIdeal& ideal, const GBOptions& opts) {
    const RingPtr& ring = ideal.ring();
    const MonomialOrder& ord = ring->default_order();
    FreeResolution res;
    res.ring = ring;
    res.shifts.push_back({MultiDegree(ring->grading_width(), 0)});
    if (ideal.is_zero_ideal()) return res;

    std::vector<Polynomial> gens = minimalize_generators(ideal.gens(), opts);
    for (const auto& gen : gens)
        if (!gen.is_homogeneous()) throw HomogeneityError("resolution needs homogeneous input");

    std::vector<MultiDegree> cur_shifts;
    std::vector<std::vector<Polynomial>> row(1);
    for (const auto& gen : gens) {
        cur_shifts.push_back(gen.multidegree());
        row[0].push_back(gen);
    }
    res.mats.push_back(std::move(row));
    res.shifts.push_back(cur_shifts);

    std::vector<VecPoly> cur;
    for (const auto& gen : gens) cur.push_back(VecPoly::unit(ring, 1, 0, gen));
    // re-express: columns of mats[k] live in F_k with rank = |cur|
    while (true) {
        std::vector<VecPoly> syz = module_syzygies(cur, ord, opts);
        syz = minimalize_module(std::move(syz), cur_shifts, ord, opts);
        if (syz.empty()) break;
        int rows = static_cast<int>(cur.size());
        std::vector<std::vector<Polynomial>> mat(rows,
                                                 std::vector<Polynomial>(syz.size(), Polynomial::zero(ring)));
        std::vector<MultiDegree> next_shifts;
        for (std::size_t c = 0; c < syz.size(); ++c) {
            next_shifts.push_back(syz[c].multidegree(cur_shifts));
            for (int r = 0; r < rows; ++r) mat[r][c] = syz[c].comp(r);
        }
        res.mats.push_back(std::move(mat));
        res.shifts.push_back(next_shifts);
        // next step: syzygies of the new columns inside R^{|cur| -> rank rows}
        cur = std::move(syz);
        cur_shifts = std::move(next_shifts);
    }
    return res;
}

std::vector<VecPoly> syzygies(const std::vector<Polynomial>& gens, const GBOptions& opts) {
    if (gens.empty()) return {};
    const RingPtr& ring = gens.front().ring();
    std::vector<VecPoly> cur;
    for (const auto& g : gens) cur.push_back(VecPoly::unit(ring, 1, 0, g));
    return module_syzygies(cur, ring->default_order(), opts);
}

}  // namespace linprod
