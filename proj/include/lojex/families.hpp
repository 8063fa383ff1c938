#pragma once

#include "lojex/geometry.hpp"

#include <string>
#include <variant>

namespace lojex {

// a + b sqrt(d): d = 1 and b = 0 for rationals, otherwise d >= 2 squarefree.
class Surd {
public:
    Surd() = default;
    Surd(Rat r) : a_(std::move(r)) {}
    // Normalizes d to its squarefree part; throws InvalidInput for d < 0.
    Surd(Rat a, Rat b, Int d);

    const Rat& a() const { return a_; }
    const Rat& b() const { return b_; }
    const Int& d() const { return d_; }
    bool is_rational() const { return b_.is_zero(); }

    int sign() const;
    std::string str() const;
    double approx() const;

    // Rational bounds lo <= x <= hi with hi - lo <= width.
    std::pair<Rat, Rat> bounds(const Rat& width) const;

    friend Surd operator+(const Surd& x, const Surd& y);
    friend Surd operator-(const Surd& x, const Surd& y);
    friend Surd operator*(const Surd& x, const Surd& y);
    friend bool operator==(const Surd& x, const Surd& y) = default;
    // Exact order; works across different radicands.
    friend std::strong_ordering operator<=>(const Surd& x, const Surd& y);

private:
    Rat a_;
    Rat b_;
    Int d_ = 1;
};

using CandidateLabel = std::variant<std::vector<std::int64_t>, std::string>;

std::string label_str(const CandidateLabel& label);

struct FamilyCandidate {
    CandidateLabel label;
    Rat a0, a1; // alpha(t) = a0 + a1 t
    Rat b0, b1; // beta(t)  = b0 + b1 t

    Rat alpha(const Rat& t) const { return a0 + a1 * t; }
    Rat beta(const Rat& t) const { return b0 + b1 * t; }
};

class FamilySpec {
public:
    // Throws InvalidInput when empty or when some alpha or beta is not
    // positive on [0, 1].
    explicit FamilySpec(std::vector<FamilyCandidate> candidates);

    const std::vector<FamilyCandidate>& candidates() const { return candidates_; }
    std::size_t size() const { return candidates_.size(); }

private:
    std::vector<FamilyCandidate> candidates_;
};

// Roots in (0, 1) of every nonzero h_ij = alpha_i beta_j - alpha_j beta_i,
// sorted and deduplicated.
std::vector<Surd> walls(const FamilySpec& spec);

// Candidates attaining max alpha/beta at t, in input order.
std::vector<std::size_t> maximizers_at(const FamilySpec& spec, const Surd& t);

struct Chamber {
    Surd lo, hi;                       // open interval (lo, hi)
    Rat sample;                        // rational point inside
    std::vector<std::size_t> maximizers;
    std::size_t formula = 0;           // L = alpha_j / beta_j on the chamber
    bool inv_affine = false;           // beta_j / alpha_j affine in t
};

struct WallReport {
    Surd t;
    std::vector<std::size_t> maximizers;
    bool continuous = false;           // adjacent chamber formulas agree at t
};

struct ChamberReport {
    std::vector<Surd> walls;
    std::vector<Chamber> chambers;
    std::vector<WallReport> wall_maximizers;
    Rat L0, L1;                        // L(0), L(1)
    std::vector<std::size_t> maximizers0, maximizers1;
    // 1/L is one affine function on all of [0, 1].
    bool inv_L_affine = false;
};

ChamberReport analyze(const FamilySpec& spec);

// L(t) = max_i alpha_i(t) / beta_i(t) at a rational t in [0, 1].
Rat L_at(const FamilySpec& spec, const Rat& t);

struct StabilityReport {
    std::size_t maximizer = 0;
    Rat gap;          // L(t0) - second largest ratio, > 0
    Surd lo, hi;      // the maximizer is the unique one on (lo, hi) ∩ [0, 1]
};

// Throws InvalidInput if t0 is outside [0, 1] or the maximizer at t0 is not
// unique.
StabilityReport stability_neighborhood(const FamilySpec& spec, const Rat& t0);

// b(t) data for building a family from a monomial ideal a.
struct PrincipalExponent {
    RatVec e0, e1; // exponent e(t) = e0 + e1 t of the generator of b(t)
};

struct ProductTerm {
    MonomialIdeal ideal;
    Rat l0, l1; // lambda(t) = l0 + l1 t
};

using BFamily = std::variant<PrincipalExponent, std::vector<ProductTerm>>;

// Candidates: compact facet normals u of NP(a), alpha = h_a(u),
// beta(t) = <u, e(t)> or sum lambda_j(t) h_(I_j)(u).
FamilySpec family_from_monomial(const MonomialIdeal& a, const BFamily& b);

} // namespace lojex
