#include "lojex/geometry.hpp"

#include "lojex/error.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace lojex {

ExpVec::ExpVec(std::vector<std::int64_t> coords) : c_(std::move(coords))
{
    for (auto x : c_)
        if (x < 0)
            throw InvalidInput("negative exponent");
}

ExpVec ExpVec::unit(std::size_t n, std::size_t i, std::int64_t scale)
{
    std::vector<std::int64_t> c(n, 0);
    c.at(i) = scale;
    return ExpVec(std::move(c));
}

bool ExpVec::divides(const ExpVec& o) const
{
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] > o.c_[i])
            return false;
    return true;
}

std::int64_t ExpVec::degree() const { return std::accumulate(c_.begin(), c_.end(), std::int64_t{0}); }

RatVec ExpVec::to_rat() const
{
    RatVec r;
    r.reserve(c_.size());
    for (auto x : c_)
        r.emplace_back(x);
    return r;
}

ExpVec operator+(const ExpVec& a, const ExpVec& b)
{
    if (a.size() != b.size())
        throw InvalidInput("exponent dimension mismatch");
    std::vector<std::int64_t> c(a.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = a[i] + b[i];
    return ExpVec(std::move(c));
}

ExpVec operator*(std::int64_t k, const ExpVec& a)
{
    std::vector<std::int64_t> c(a.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = k * a[i];
    return ExpVec(std::move(c));
}

WeightVec::WeightVec(std::vector<std::int64_t> coords) : c_(std::move(coords))
{
    if (c_.empty())
        throw InvalidInput("empty weight vector");
    std::int64_t g = 0;
    for (auto x : c_) {
        if (x < 0)
            throw InvalidInput("weight vectors must be nonnegative");
        g = std::gcd(g, x);
    }
    if (g == 0)
        throw InvalidInput("weight vector is zero");
    if (g != 1)
        throw InvalidInput("weight vector is not primitive");
}

WeightVec WeightVec::primitive_of(std::vector<std::int64_t> coords)
{
    std::int64_t g = 0;
    for (auto x : coords)
        g = std::gcd(g, x < 0 ? -x : x);
    if (g > 1)
        for (auto& x : coords)
            x /= g;
    return WeightVec(std::move(coords));
}

bool WeightVec::strictly_positive() const
{
    return std::all_of(c_.begin(), c_.end(), [](auto x) { return x > 0; });
}

bool WeightVec::is_diagonal() const
{
    return std::all_of(c_.begin(), c_.end(), [](auto x) { return x == 1; });
}

std::int64_t WeightVec::log_discrepancy() const
{
    return std::accumulate(c_.begin(), c_.end(), std::int64_t{0});
}

std::int64_t dot(const WeightVec& u, const ExpVec& m)
{
    if (u.size() != m.size())
        throw InvalidInput("weight/exponent dimension mismatch");
    std::int64_t s = 0;
    for (std::size_t i = 0; i < m.size(); ++i) {
        std::int64_t t;
        if (__builtin_mul_overflow(u[i], m[i], &t) || __builtin_add_overflow(s, t, &s))
            throw Unsupported("integer overflow in <u, m>");
    }
    return s;
}

Rat dot(const WeightVec& u, std::span<const Rat> x)
{
    if (u.size() != x.size())
        throw InvalidInput("weight/point dimension mismatch");
    Rat s = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (u[i] != 0)
            s += Rat(u[i]) * x[i];
    return s;
}

namespace {

template <class V>
bool dominates(const V& a, const V& b)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] < b[i])
            return false;
    return true;
}

template <class V>
std::vector<V> minimal_elements(std::vector<V> pts)
{
    if (pts.empty())
        throw InvalidInput("empty generator set");
    const std::size_t n = pts.front().size();
    for (const auto& p : pts)
        if (p.size() != n)
            throw InvalidInput("generators of different dimensions");
    // After a lexicographic sort a dominated point comes after (one of) its
    // dominators, so one forward pass against the kept set suffices.
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    std::vector<V> kept;
    for (auto& p : pts) {
        bool dominated = std::any_of(kept.begin(), kept.end(), [&](const V& k) { return dominates(p, k); });
        if (!dominated)
            kept.push_back(std::move(p));
    }
    return kept;
}

} // namespace

std::vector<ExpVec> minimalize(std::vector<ExpVec> gens) { return minimal_elements(std::move(gens)); }
std::vector<RatVec> minimalize(std::vector<RatVec> pts) { return minimal_elements(std::move(pts)); }

MonomialIdeal::MonomialIdeal(std::size_t dim, std::vector<ExpVec> gens) : dim_(dim)
{
    if (dim == 0)
        throw InvalidInput("ambient dimension must be at least 1");
    for (const auto& g : gens)
        if (g.size() != dim)
            throw InvalidInput("generator of dimension " + std::to_string(g.size()) + " in an ideal of dimension "
                               + std::to_string(dim));
    gens_ = minimalize(std::move(gens));
}

MonomialIdeal MonomialIdeal::maximal(std::size_t dim)
{
    std::vector<ExpVec> g;
    for (std::size_t i = 0; i < dim; ++i)
        g.push_back(ExpVec::unit(dim, i));
    return MonomialIdeal(dim, std::move(g));
}

MonomialIdeal MonomialIdeal::diagonal(const std::vector<std::int64_t>& exponents)
{
    std::vector<ExpVec> g;
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        if (exponents[i] <= 0)
            throw InvalidInput("diagonal ideal needs positive exponents");
        g.push_back(ExpVec::unit(exponents.size(), i, exponents[i]));
    }
    return MonomialIdeal(exponents.size(), std::move(g));
}

bool MonomialIdeal::contains(const ExpVec& m) const
{
    return std::any_of(gens_.begin(), gens_.end(), [&](const ExpVec& g) { return g.divides(m); });
}

std::int64_t MonomialIdeal::pure_power(std::size_t i) const
{
    for (const auto& g : gens_) {
        bool pure = true;
        for (std::size_t k = 0; k < dim_ && pure; ++k)
            pure = (k == i) ? g[k] >= 0 : g[k] == 0;
        if (pure)
            return g[i];
    }
    return 0;
}

bool MonomialIdeal::is_m_primary() const
{
    for (std::size_t i = 0; i < dim_; ++i) {
        bool found = std::any_of(gens_.begin(), gens_.end(), [&](const ExpVec& g) {
            for (std::size_t k = 0; k < dim_; ++k)
                if (k != i && g[k] != 0)
                    return false;
            return true;
        });
        if (!found)
            return false;
    }
    return true;
}

bool MonomialIdeal::is_proper() const
{
    return std::none_of(gens_.begin(), gens_.end(), [](const ExpVec& g) { return g.degree() == 0; });
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b)
{
    if (a.dim() != b.dim())
        throw InvalidInput("product of ideals of different dimensions");
    std::vector<ExpVec> g;
    g.reserve(a.gens().size() * b.gens().size());
    for (const auto& x : a.gens())
        for (const auto& y : b.gens())
            g.push_back(x + y);
    return MonomialIdeal(a.dim(), std::move(g));
}

MonomialIdeal power(const MonomialIdeal& a, unsigned k)
{
    if (k == 0)
        return MonomialIdeal(a.dim(), {ExpVec::zero(a.dim())});
    MonomialIdeal r = a;
    for (unsigned i = 1; i < k; ++i)
        r = product(r, a);
    return r;
}

Rat support(const MonomialIdeal& ideal, const WeightVec& u)
{
    std::int64_t best = dot(u, ideal.gens().front());
    for (const auto& g : ideal.gens())
        best = std::min(best, dot(u, g));
    return Rat(best);
}

std::vector<Facet> NewtonPolyhedron::compact_facets() const
{
    std::vector<Facet> out;
    std::copy_if(facets_.begin(), facets_.end(), std::back_inserter(out), [](const Facet& f) { return f.compact(); });
    return out;
}

Rat NewtonPolyhedron::support(const WeightVec& u) const { return support(std::span(u.coords())); }

Rat NewtonPolyhedron::support(std::span<const std::int64_t> u) const
{
    if (u.size() != dim_)
        throw InvalidInput("weight dimension mismatch");
    for (auto x : u)
        if (x < 0)
            throw InvalidInput("support function needs a nonnegative weight");
    Rat best;
    bool first = true;
    for (const auto& v : vertices_) {
        Rat s = 0;
        for (std::size_t i = 0; i < dim_; ++i)
            if (u[i] != 0)
                s += Rat(u[i]) * v[i];
        if (first || s < best)
            best = s;
        first = false;
    }
    return best;
}

bool NewtonPolyhedron::contains(std::span<const Rat> x) const
{
    if (x.size() != dim_)
        throw InvalidInput("point dimension mismatch");
    for (const auto& c : x)
        if (c.sign() < 0)
            return false;
    for (const auto& f : facets_)
        if (dot(f.normal, x) < f.offset)
            return false;
    return true;
}

bool NewtonPolyhedron::contains(const ExpVec& m) const
{
    RatVec x = m.to_rat();
    return contains(std::span<const Rat>(x));
}

bool NewtonPolyhedron::bounded_complement() const
{
    for (std::size_t i = 0; i < dim_; ++i) {
        bool on_axis = std::any_of(vertices_.begin(), vertices_.end(), [&](const RatVec& v) {
            for (std::size_t k = 0; k < dim_; ++k)
                if (k != i && !v[k].is_zero())
                    return false;
            return true;
        });
        if (!on_axis)
            return false;
    }
    return true;
}

NewtonPolyhedron newton_polyhedron(const MonomialIdeal& ideal)
{
    std::vector<RatVec> pts;
    pts.reserve(ideal.gens().size());
    for (const auto& g : ideal.gens())
        pts.push_back(g.to_rat());
    return NewtonPolyhedron::from_points(ideal.dim(), std::move(pts));
}

bool member(const NewtonPolyhedron& poly, std::span<const Rat> x) { return poly.contains(x); }
bool member(const NewtonPolyhedron& poly, const ExpVec& m) { return poly.contains(m); }

NewtonPolyhedron minkowski_sum(const NewtonPolyhedron& p, const NewtonPolyhedron& q)
{
    if (p.dim() != q.dim())
        throw InvalidInput("Minkowski sum of polyhedra of different dimensions");
    std::vector<RatVec> pts;
    for (const auto& a : p.vertices()) {
        for (const auto& b : q.vertices()) {
            RatVec s(a.size());
            for (std::size_t i = 0; i < a.size(); ++i)
                s[i] = a[i] + b[i];
            pts.push_back(std::move(s));
        }
    }
    return NewtonPolyhedron::from_points(p.dim(), std::move(pts));
}

NewtonPolyhedron scale(const NewtonPolyhedron& p, const Rat& r)
{
    if (r.sign() <= 0)
        throw InvalidInput("scale factor must be positive, got " + r.str());
    // Scaling by r > 0 preserves the face lattice, the vertex order and the
    // facet normals; only coordinates and offsets change.
    NewtonPolyhedron out = p;
    for (auto& v : out.vertices_)
        for (auto& x : v)
            x *= r;
    for (auto& f : out.facets_)
        f.offset *= r;
    return out;
}

} // namespace lojex
