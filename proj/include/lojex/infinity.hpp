#pragma once

#include "lojex/geometry.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>

namespace lojex {

// Univariate polynomial over Q, coefficients from degree 0 upwards, no
// trailing zeros. The zero polynomial has no coefficients.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rat> coeffs);

    const std::vector<Rat>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Rat eval(const Rat& z) const;
    UniPoly monic() const;
    std::string str(const std::string& var = "z") const;

    friend bool operator==(const UniPoly&, const UniPoly&) = default;

private:
    std::vector<Rat> c_;
};

// Remainder of a by b; b nonzero.
UniPoly poly_rem(const UniPoly& a, const UniPoly& b);
// Monic gcd; gcd(0, 0) = 0.
UniPoly poly_gcd(const UniPoly& a, const UniPoly& b);
// Distinct rational roots, ascending. nullopt when the integer coefficients
// are too large to enumerate divisors of.
std::optional<std::vector<Rat>> rational_roots(const UniPoly& p);

// Polynomial in n variables: exponent -> nonzero coefficient.
using Polynomial = std::map<ExpVec, Rat>;

class PolyMap {
public:
    // Drops zero coefficients. Throws InvalidInput for n == 0, no
    // components, a zero component or an exponent of the wrong size.
    PolyMap(std::size_t n, std::vector<Polynomial> components);

    std::size_t n() const { return n_; }
    const std::vector<Polynomial>& components() const { return comps_; }

private:
    std::size_t n_ = 0;
    std::vector<Polynomial> comps_;
};

// conv(union of supports and 0) + orthant.
NewtonPolyhedron gamma_infinity(const PolyMap& F);

// Terms of f of minimal weight <w, alpha>.
Polynomial initial_form(const Polynomial& f, std::span<const std::int64_t> w);

struct FaceCheck {
    WeightVec w;
    // Each face polynomial (f_j)_w written as monomial * p_j(z) with
    // z = x^w2 y^-w1; p_j(0) != 0. Empty when some face is a monomial.
    std::vector<UniPoly> faces;
    UniPoly gcd;             // gcd of the p_j, 1 when some face is a monomial
    bool monomial_face = false;
    bool degenerate = false; // gcd nonconstant: common zero in the torus
};

struct NondegeneracyReport {
    bool nondegenerate = true;
    std::optional<WeightVec> offending;
    // Edge normals of every component, then one interior weight per open
    // cone between consecutive edge normals.
    std::vector<FaceCheck> checks;
};

// Literal definition with w > 0 and the min convention; zeros are taken
// over the algebraic closure. Throws Unsupported for n != 2.
NondegeneracyReport nondegenerate_at_infinity(const PolyMap& F);

// The face system at w evaluated at x = z^a, y = z^b with a w2 - b w1 = 1,
// a point of the torus where x^w2 y^-w1 = z. True when every (f_j)_w
// vanishes there.
bool face_system_vanishes(const PolyMap& F, const WeightVec& w, const Rat& z);

struct DivisorRow {
    std::string label;
    std::int64_t ord_x = 0;
    std::int64_t ord_y = 0;

    friend bool operator==(const DivisorRow&, const DivisorRow&) = default;
};

class DivisorTable {
public:
    // Throws InvalidInput on negative orders, duplicate labels or when no
    // row has ord_x > 0.
    explicit DivisorTable(std::vector<DivisorRow> rows);

    const std::vector<DivisorRow>& rows() const { return rows_; }

private:
    std::vector<DivisorRow> rows_;
};

// Rational or +infinity.
struct ExtRat {
    bool infinite = false;
    Rat value;

    std::string str() const { return infinite ? "inf" : value.str(); }
    friend bool operator==(const ExtRat&, const ExtRat&) = default;
};

struct InfinityMin {
    Rat value;                       // min ord_y / ord_x over rows with ord_x > 0
    std::vector<std::string> argmin; // labels attaining it
};

InfinityMin loj_infinity_min(const DivisorTable& T);

// Restricted to the rows in `incident`; infinite when none of them has
// ord_x > 0. Throws InvalidInput for an unknown label.
ExtRat loj_infinity_local(const DivisorTable& T, const std::set<std::string>& incident);

} // namespace lojex
