#pragma once

#include "lojex/geometry.hpp"

#include <optional>

namespace lojex {

// Largest dimension for which mixed tables are interpolated.
inline constexpr std::size_t kMaxMixedDim = 3;

// Number of monomials outside an m-primary monomial ideal. Throws
// InvalidInput otherwise.
std::int64_t colength(const MonomialIdeal& ideal);

// length(R / I^n1 J^n2). Both ideals m-primary.
std::int64_t colength(const MonomialIdeal& I, std::int64_t n1, const MonomialIdeal& J, std::int64_t n2);

struct MixedTable {
    std::size_t dim = 0;
    MonomialIdeal I;
    MonomialIdeal J;
    std::vector<std::int64_t> e; // e[i] = e(I^[i], J^[d-i])
    std::int64_t n0 = 0;         // window actually used: n1, n2 in n0 .. n0 + span
    std::int64_t span = 0;
    bool stable = false;         // the window starting at n0 + 1 gives the same e
};

// Interpolates the colength polynomial of I^n1 J^n2. n0 <= 0 selects the
// default 2 * (largest generator coordinate); an unstable window is doubled
// up to 4x before giving up with InternalError. Throws Unsupported for
// dim > kMaxMixedDim.
MixedTable mixed_multiplicities(const MonomialIdeal& I, const MonomialIdeal& J, std::int64_t n0 = 0);

// e(I J) = sum_i C(d, i) e_i.
std::int64_t product_multiplicity(const MixedTable& t);

// x^(1/d) <= y^(1/d) + z^(1/d) for positive integers, decided exactly.
bool root_sum_le(const Int& x, const Int& y, const Int& z, unsigned d);

struct LogConvexityCheck {
    std::size_t i = 0;
    std::int64_t square = 0;  // e_i^2
    std::int64_t product = 0; // e_(i-1) e_(i+1)
    bool holds = false;
};

struct MinkowskiCheck {
    std::int64_t e_product = 0; // e(IJ)
    std::int64_t e_I = 0;
    std::int64_t e_J = 0;
    bool holds = false;
};

struct ContainmentBound {
    unsigned p = 0;
    unsigned q = 0; // minimal q with J^q in closure(I^p)
    std::size_t i = 0;
    Int lhs; // q^i e(J^[i], m^[d-i])
    Int rhs; // p^i e(I^[i], m^[d-i])
    bool holds = false;
};

struct LojBound {
    std::size_t i = 0;
    Rat loj;  // Loj_J(I)
    Rat lhs;  // loj^i e(J^[i], m^[d-i])
    Rat rhs;  // e(I^[i], m^[d-i])
    bool holds = false;
};

struct TeissierReport {
    MixedTable table;       // (I, J)
    MixedTable table_I_m;   // (I, m)
    MixedTable table_J_m;   // (J, m)
    std::vector<LogConvexityCheck> log_convexity;
    MinkowskiCheck minkowski;
    std::vector<ContainmentBound> containment;
    std::vector<LojBound> loj_bounds;
    bool all_hold = false;
};

// Log-convexity e_i^2 <= e_(i-1) e_(i+1), the Minkowski inequality for e(IJ),
// the containment bounds for the minimal q at each p in `powers`, and the
// exponent bound Loj_J(I)^i e(J^[i], m) >= e(I^[i], m).
TeissierReport check_teissier(const MonomialIdeal& I, const MonomialIdeal& J,
                              const std::vector<unsigned>& powers = {1, 2, 3});

struct GradientBound {
    std::size_t i = 0;
    Rat lhs;  // L^i
    Int rhs;  // e(J(f)^[i], m^[d-i])
    bool holds = false;
};

struct MilnorReport {
    std::vector<std::int64_t> exponents;
    std::int64_t mu = 0;
    Rat loj; // Loj_m(J(f))
    std::vector<GradientBound> bounds;
    bool all_hold = false;
};

// f = sum x_i^(a_i), J(f) = (x_i^(a_i - 1)). Throws InvalidInput if some
// a_i < 2, Unsupported above the hull dimension.
MilnorReport milnor_and_gradient(const std::vector<std::int64_t>& exponents);

} // namespace lojex
