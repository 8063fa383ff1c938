#pragma once

#include "lojex/rat.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace lojex {

// Largest ambient dimension the hull supports.
inline constexpr std::size_t kMaxHullDim = 4;

// Exponent vector of a monomial: n nonnegative integers.
class ExpVec {
public:
    ExpVec() = default;
    explicit ExpVec(std::vector<std::int64_t> coords);
    ExpVec(std::initializer_list<std::int64_t> coords) : ExpVec(std::vector<std::int64_t>(coords)) {}

    static ExpVec zero(std::size_t n) { return ExpVec(std::vector<std::int64_t>(n, 0)); }
    static ExpVec unit(std::size_t n, std::size_t i, std::int64_t scale = 1);

    std::size_t size() const { return c_.size(); }
    std::int64_t operator[](std::size_t i) const { return c_[i]; }
    const std::vector<std::int64_t>& coords() const { return c_; }
    auto begin() const { return c_.begin(); }
    auto end() const { return c_.end(); }

    // Componentwise <=, i.e. the monomial of `this` divides the one of `o`.
    bool divides(const ExpVec& o) const;
    std::int64_t degree() const;
    RatVec to_rat() const;

    friend ExpVec operator+(const ExpVec& a, const ExpVec& b);
    friend ExpVec operator*(std::int64_t k, const ExpVec& a);
    friend auto operator<=>(const ExpVec&, const ExpVec&) = default;
    friend bool operator==(const ExpVec&, const ExpVec&) = default;

private:
    std::vector<std::int64_t> c_;
};

// Nonnegative, nonzero, primitive integer weight: the toric valuation
// v_u(x^m) = <u, m>.
class WeightVec {
public:
    WeightVec() = default;
    // Throws InvalidInput unless nonnegative, nonzero and primitive.
    explicit WeightVec(std::vector<std::int64_t> coords);
    WeightVec(std::initializer_list<std::int64_t> coords)
        : WeightVec(std::vector<std::int64_t>(coords)) {}

    // Divides by the gcd first.
    static WeightVec primitive_of(std::vector<std::int64_t> coords);
    static WeightVec diagonal(std::size_t n) { return WeightVec(std::vector<std::int64_t>(n, 1)); }

    std::size_t size() const { return c_.size(); }
    std::int64_t operator[](std::size_t i) const { return c_[i]; }
    const std::vector<std::int64_t>& coords() const { return c_; }
    bool strictly_positive() const;
    bool is_diagonal() const;
    // Log discrepancy of v_u at a smooth point: sum of the coordinates.
    std::int64_t log_discrepancy() const;

    friend auto operator<=>(const WeightVec&, const WeightVec&) = default;
    friend bool operator==(const WeightVec&, const WeightVec&) = default;

private:
    std::vector<std::int64_t> c_;
};

std::int64_t dot(const WeightVec& u, const ExpVec& m);
Rat dot(const WeightVec& u, std::span<const Rat> x);

// Componentwise-minimal elements (duplicates removed), sorted
// lexicographically. Throws InvalidInput on empty input or mixed dimensions.
std::vector<ExpVec> minimalize(std::vector<ExpVec> gens);

// Same for rational points; used to prune hull input.
std::vector<RatVec> minimalize(std::vector<RatVec> pts);

class MonomialIdeal {
public:
    // Minimalizes `gens`. Throws InvalidInput if empty, dimension mismatch,
    // dim == 0 or a negative exponent.
    MonomialIdeal(std::size_t dim, std::vector<ExpVec> gens);

    static MonomialIdeal maximal(std::size_t dim);
    static MonomialIdeal diagonal(const std::vector<std::int64_t>& exponents);

    std::size_t dim() const { return dim_; }
    const std::vector<ExpVec>& gens() const { return gens_; }

    bool contains(const ExpVec& m) const;
    // For every axis some generator is a pure power of that axis.
    bool is_m_primary() const;
    // Exponent of the pure power of axis i among the generators, or 0.
    std::int64_t pure_power(std::size_t i) const;
    bool is_proper() const;

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
    std::size_t dim_ = 0;
    std::vector<ExpVec> gens_;
};

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal power(const MonomialIdeal& a, unsigned k);

// h_I(u) = min over generators of <u, g>.
Rat support(const MonomialIdeal& ideal, const WeightVec& u);

struct Facet {
    WeightVec normal;
    Rat offset;
    // Indices into NewtonPolyhedron::vertices() lying on the facet.
    std::vector<std::size_t> vertex_ids;

    bool compact() const { return normal.strictly_positive(); }

    friend bool operator==(const Facet&, const Facet&) = default;
};

// conv(points) + nonnegative orthant, held in both V- and H-representation.
class NewtonPolyhedron {
public:
    // Exact hull of `points` plus the orthant. Throws Unsupported for
    // dim > kMaxHullDim, InvalidInput for empty input or negative coordinates.
    static NewtonPolyhedron from_points(std::size_t dim, std::vector<RatVec> points);

    std::size_t dim() const { return dim_; }
    const std::vector<RatVec>& vertices() const { return vertices_; }
    // Sorted lexicographically by normal.
    const std::vector<Facet>& facets() const { return facets_; }
    std::vector<Facet> compact_facets() const;

    // inf over P of <u, x>, attained at a vertex for u >= 0.
    Rat support(const WeightVec& u) const;
    Rat support(std::span<const std::int64_t> u) const;
    bool contains(std::span<const Rat> x) const;
    bool contains(const ExpVec& m) const;
    // Complement in the orthant is bounded (m-primary).
    bool bounded_complement() const;

    friend bool operator==(const NewtonPolyhedron&, const NewtonPolyhedron&) = default;
    friend NewtonPolyhedron scale(const NewtonPolyhedron& p, const Rat& r);

private:
    std::size_t dim_ = 0;
    std::vector<RatVec> vertices_;
    std::vector<Facet> facets_;
};

NewtonPolyhedron newton_polyhedron(const MonomialIdeal& ideal);
bool member(const NewtonPolyhedron& poly, std::span<const Rat> x);
bool member(const NewtonPolyhedron& poly, const ExpVec& m);
NewtonPolyhedron minkowski_sum(const NewtonPolyhedron& p, const NewtonPolyhedron& q);
// Throws InvalidInput for r <= 0.
NewtonPolyhedron scale(const NewtonPolyhedron& p, const Rat& r);

// Volume of orthant \ P. Throws InvalidInput if the complement is unbounded,
// Unsupported for dim > 3.
Rat covolume(const NewtonPolyhedron& p);

} // namespace lojex
