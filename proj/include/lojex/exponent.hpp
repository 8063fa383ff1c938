#pragma once

#include "lojex/geometry.hpp"

#include <optional>
#include <variant>

namespace lojex {

// Asymptotic data of a monomial filtration a_p.
struct PowerFiltration {
    MonomialIdeal ideal; // a_p = I^p
};

struct LinearForm {
    WeightVec w;
    Rat c; // > 0
};

struct LinearFiltration {
    std::size_t dim = 0;
    std::vector<LinearForm> constraints; // a_p = {x^m : <w_j, m> >= c_j p for all j}
};

struct ProductFactor {
    MonomialIdeal ideal;
    Rat lambda; // > 0
};

struct ProductFiltration {
    std::vector<ProductFactor> factors; // closure of prod I_j^(lambda_j p)
};

class FiltrationSpec {
public:
    using Kind = std::variant<PowerFiltration, LinearFiltration, ProductFiltration>;

    // Validates: positive c / lambda, matching dimensions, nonempty lists.
    explicit FiltrationSpec(Kind kind);
    static FiltrationSpec power(MonomialIdeal ideal) { return FiltrationSpec(PowerFiltration{std::move(ideal)}); }

    std::size_t dim() const { return dim_; }
    const Kind& kind() const { return kind_; }
    bool is_power() const { return std::holds_alternative<PowerFiltration>(kind_); }

private:
    Kind kind_;
    std::size_t dim_ = 0;
};

// v_u(a.) = inf_p v_u(a_p)/p.
Rat v_filtration(const WeightVec& u, const FiltrationSpec& spec);

// NP(a.) = closure of the union of (1/p) NP(a_p).
NewtonPolyhedron asymptotic_region(const FiltrationSpec& spec);

struct CandidateValue {
    WeightVec u;
    Rat va;
    Rat vb;
    Rat ratio;
};

struct LojResult {
    bool infinite = false;
    Rat value;
    std::vector<WeightVec> maximizers;
    std::vector<CandidateValue> per_candidate;
    // Set when the candidate set is not proved to contain a maximizer
    // (filtration pairs in dimension >= 3).
    bool lower_bound_only = false;
};

// max over compact facet normals u of NP(a) of h_a(u)/h_b(u). Throws
// InvalidInput unless a is m-primary and b proper.
LojResult loj_ideal(const MonomialIdeal& a, const MonomialIdeal& b);

// Pairs of power filtrations delegate to loj_ideal. Otherwise the candidates
// are the facet normals of both regions plus the coordinate rays, which is a
// complete set in dimension <= 2.
LojResult loj_filtration(const FiltrationSpec& a, const FiltrationSpec& b);

struct LctResult {
    Rat value;
    std::vector<WeightVec> minimizers;
};

// min over compact facets (u, c) of A(u)/c. Throws InvalidInput unless the
// complement of the region is bounded.
LctResult lct(const NewtonPolyhedron& region);
Rat lct(const MonomialIdeal& ideal);
Rat lct(const FiltrationSpec& spec);

struct ThetaReport {
    Rat lct;
    Rat loj_m;
    Rat theta;
    bool rigid = false;
    std::optional<std::pair<WeightVec, Rat>> diagonal_facet;
};

ThetaReport theta(const MonomialIdeal& ideal);

struct SharpnessCheck {
    WeightVec v;
    Rat v_mq;  // v(m^q)
    Rat v_jnp; // v(J_N^p)
};

struct SharpnessWitness {
    std::int64_t N = 0;
    std::int64_t M = 0;
    std::int64_t p = 0;
    std::int64_t q = 0;
    ExpVec witness; // y^q
    std::vector<SharpnessCheck> checks;
    bool condition1 = false;       // v(m^q) >= v(J_N^p) for all v
    Rat witness_value;             // q / N^2, to be compared with p
    bool witness_outside = false;  // y^q not in p NP(J_N)
};

// J_N = closure(x^N, y^(N^2)) with N, M, q = pNM chosen from V so that every
// valuation in V sees m^q >= J_N^p although y^q lies outside J_N^p.
// V: strictly positive weights in dimension 2.
SharpnessWitness sharpness_witness(const std::vector<WeightVec>& V, std::int64_t p = 1);

} // namespace lojex
