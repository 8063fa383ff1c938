#pragma once

#include "lojex/geometry.hpp"

#include <optional>
#include <variant>

namespace lojex {

// Default cap on q in contains_closure; b^q is materialized explicitly.
inline constexpr unsigned kMaxContainmentPower = 64;

// A facet inequality <u, x> >= offset valid on the target polyhedron and
// violated by `monomial` by `deficit` = offset - <u, monomial> > 0.
struct ViolatedFacet {
    WeightVec normal;
    Rat offset;
    ExpVec monomial;
    Rat deficit;
};

// point = sum weights[i] * generators[i] + slack, weights a convex
// combination, slack >= 0.
struct ConvexCombination {
    RatVec point;
    RatVec weights;
    RatVec slack;
};

struct ConvexCertificate {
    std::vector<RatVec> generators;
    std::vector<ConvexCombination> items;
};

// k * monomial = sum_j mult_j * g_j + r with sum_j mult_j = k and r >= 0,
// i.e. x^(k m) lies in I^k.
struct PowerCertificate {
    ExpVec monomial;
    std::int64_t k = 0;
    std::vector<std::pair<ExpVec, std::int64_t>> parts;
};

struct ClosureCertificate {
    bool member = false;
    std::variant<ViolatedFacet, ConvexCertificate, PowerCertificate> witness;

    // Re-validates the witness by pure arithmetic against the generating
    // points of the target (the polyhedron is conv(target) + orthant).
    bool recheck(const std::vector<RatVec>& target) const;
};

// Minimal generators of the integral closure: the minimal lattice points of
// NP(I).
MonomialIdeal closure_generators(const MonomialIdeal& ideal);

// Decides b^q ⊆ closure(a^p). Throws Unsupported for q > max_q,
// InvalidInput for q == 0, p == 0 or a dimension mismatch.
ClosureCertificate contains_closure(const MonomialIdeal& b, unsigned q, const MonomialIdeal& a, unsigned p,
                                    unsigned max_q = kMaxContainmentPower);

struct PowerMembership {
    bool member = false;
    std::optional<std::int64_t> k;
    std::optional<PowerCertificate> certificate;
};

// Classical test x^m ∈ closure(I) ⟺ x^(km) ∈ I^k for some k, driven by an
// exact convex combination over the generators (independent of the facet
// description). Returns the smallest such k found.
PowerMembership power_oracle_member(const MonomialIdeal& ideal, const ExpVec& m);

} // namespace lojex
