#pragma once

// Brute-force reference computations. Each one reaches its answer by a route
// independent of the production code path it is used to check (V- instead of
// H-representation, lattice scans instead of facet formulas, ...). Used by the
// test suites and by `lojex --verify`.

#include "lojex/geometry.hpp"
#include "lojex/infinity.hpp"

#include <optional>

namespace lojex::oracle {

// Exact feasibility of  lambda >= 0, sum lambda = 1, sum lambda_i v_i <= x
// over the vertices v_i of `poly`.
bool vrep_member(const NewtonPolyhedron& poly, std::span<const Rat> x);

// Same test directly over arbitrary generating points (not necessarily
// vertices).
bool hull_member(const std::vector<RatVec>& points, std::span<const Rat> x);

// min { s : s * (1,...,1) in conv(points) + orthant } by linear programming.
Rat diagonal_threshold(const std::vector<RatVec>& points);


// Smallest q <= max_q with every generator of b^q inside p * conv(gens(a)) +
// orthant, each generator tested by LP over p * gens(a) (no facets used).
std::optional<unsigned> min_containment_power(const MonomialIdeal& b, const MonomialIdeal& a, unsigned p,
                                              unsigned max_q);

// Number of lattice points of the pure-power box outside the ideal, each one
// tested against the generators.
std::int64_t brute_colength(const MonomialIdeal& ideal);

// Degree of the common factor of nonzero polynomials, read off the rank of
// the matrix of their shifted coefficient rows (no Euclid).
std::size_t common_factor_degree(const std::vector<UniPoly>& polys);

// First w in [1, bound]^2 (primitive) whose face system has a torus zero,
// with faces dehomogenized at y = 1 rather than in the edge parameter.
std::optional<WeightVec> brute_degenerate_weight(const PolyMap& F, std::int64_t bound);

} // namespace lojex::oracle
