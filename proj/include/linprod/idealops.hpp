#pragma once

#include "linprod/groebner.hpp"

namespace linprod {

// New ring with extra variables inserted in front of the base ring's
// variables (fresh names are the caller's responsibility).
RingPtr ring_with_front_vars(const RingPtr& base, const std::vector<std::string>& front,
                             const std::vector<MultiDegree>& front_degrees = {});

// Re-index a polynomial into `target`: variable i of f's ring becomes
// var_map[i].  A negative entry means the variable must not occur.
Polynomial map_vars(const Polynomial& f, const RingPtr& target, const std::vector<int>& var_map);

// Generators of I that do not involve the listed variables, from a
// block-elimination Groebner basis.  Result lives in the same ring.
std::vector<Polynomial> eliminate(const PolyIdeal& ideal, const std::vector<int>& kill,
                                  const GBOptions& opts = {});

PolyIdeal ideal_sum(const PolyIdeal& a, const PolyIdeal& b);
PolyIdeal ideal_product(const PolyIdeal& a, const PolyIdeal& b);
PolyIdeal ideal_power(const PolyIdeal& a, int k);

PolyIdeal intersect(const PolyIdeal& a, const PolyIdeal& b, const GBOptions& opts = {});
PolyIdeal colon(const PolyIdeal& a, const Polynomial& f, const GBOptions& opts = {});
PolyIdeal colon_ideal(const PolyIdeal& a, const PolyIdeal& b, const GBOptions& opts = {});
PolyIdeal saturate(const PolyIdeal& a, const PolyIdeal& b, const GBOptions& opts = {});

// Kernel of the ring map source -> target sending the i-th source variable
// to images[i]; computed by elimination on the graph ideal.
PolyIdeal kernel_of_map(const RingPtr& source, const std::vector<Polynomial>& images,
                        const GBOptions& opts = {});

// Same kernel for monomial images via a lattice basis of the exponent
// kernel saturated by the product of the source variables.
PolyIdeal toric_kernel(const RingPtr& source, const std::vector<Monomial>& images,
                       const RingPtr& target, const GBOptions& opts = {});

}  // namespace linprod
