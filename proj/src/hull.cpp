// Exact hull of conv(points) + orthant.
//
// The polyhedron is homogenized into the cone generated by (x, 1) for every
// input point and (e_i, 0) for every axis. Its facets are enumerated by the
// incremental double-description method over the integers: rays are inserted
// one at a time, facets strictly violated by the new ray are dropped, and each
// adjacent (kept, dropped) pair spawns a facet through the new ray. Adjacency is
// the combinatorial test on incidence sets. Facets of the cone with a nonzero
// x-part are exactly the facets of the polyhedron; the one with zero x-part is
// the face at infinity and is discarded.

#include "lojex/error.hpp"
#include "lojex/geometry.hpp"
#include "lojex/linalg.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

namespace lojex {

namespace {

class Bitset {
public:
    explicit Bitset(std::size_t n = 0) : words_((n + 63) / 64, 0) {}

    void set(std::size_t i) { words_[i / 64] |= (std::uint64_t{1} << (i % 64)); }
    bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }

    std::size_t count() const
    {
        std::size_t c = 0;
        for (auto w : words_)
            c += static_cast<std::size_t>(__builtin_popcountll(w));
        return c;
    }

    bool subset_of(const Bitset& o) const
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i])
                return false;
        return true;
    }

    friend Bitset operator&(const Bitset& a, const Bitset& b)
    {
        Bitset r = a;
        for (std::size_t i = 0; i < r.words_.size(); ++i)
            r.words_[i] &= b.words_[i];
        return r;
    }

private:
    std::vector<std::uint64_t> words_;
};

using IntVec = std::vector<Int>;

Int dot(const IntVec& a, const IntVec& b)
{
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

void make_primitive(IntVec& a)
{
    Int g = 0;
    for (const auto& x : a)
        g = gcd(g, x);
    if (g > 1)
        for (auto& x : a)
            x /= g;
}

struct ConeFacet {
    IntVec normal;
    Bitset incident;
};

// Facets of the cone spanned by `rays`; the first `rays[0].size()` rays must
// be linearly independent.
std::vector<ConeFacet> cone_facets(const std::vector<IntVec>& rays)
{
    const std::size_t d = rays.front().size();
    const std::size_t total = rays.size();

    std::vector<ConeFacet> facets;
    for (std::size_t k = 0; k < d; ++k) {
        std::vector<IntVec> others;
        for (std::size_t j = 0; j < d; ++j)
            if (j != k)
                others.push_back(rays[j]);
        IntVec a = integer_kernel_vector(others, d);
        if (dot(a, rays[k]) < 0)
            for (auto& x : a)
                x = -x;
        ConeFacet f{std::move(a), Bitset(total)};
        for (std::size_t j = 0; j < d; ++j)
            if (j != k)
                f.incident.set(j);
        facets.push_back(std::move(f));
    }

    for (std::size_t r = d; r < total; ++r) {
        std::vector<Int> value(facets.size());
        std::vector<std::size_t> pos, neg;
        for (std::size_t f = 0; f < facets.size(); ++f) {
            value[f] = dot(facets[f].normal, rays[r]);
            if (value[f] > 0)
                pos.push_back(f);
            else if (value[f] < 0)
                neg.push_back(f);
        }
        if (neg.empty()) {
            for (std::size_t f = 0; f < facets.size(); ++f)
                if (value[f] == 0)
                    facets[f].incident.set(r);
            continue;
        }

        std::vector<ConeFacet> created;
        for (auto p : pos) {
            for (auto q : neg) {
                Bitset common = facets[p].incident & facets[q].incident;
                if (common.count() + 2 < d)
                    continue;
                bool adjacent = true;
                for (std::size_t f = 0; f < facets.size() && adjacent; ++f)
                    if (f != p && f != q && common.subset_of(facets[f].incident))
                        adjacent = false;
                if (!adjacent)
                    continue;
                IntVec a(d);
                for (std::size_t i = 0; i < d; ++i)
                    a[i] = value[p] * facets[q].normal[i] - value[q] * facets[p].normal[i];
                make_primitive(a);
                common.set(r);
                created.push_back({std::move(a), std::move(common)});
            }
        }

        std::vector<ConeFacet> next;
        next.reserve(facets.size() + created.size());
        for (std::size_t f = 0; f < facets.size(); ++f) {
            if (value[f] < 0)
                continue;
            if (value[f] == 0)
                facets[f].incident.set(r);
            next.push_back(std::move(facets[f]));
        }
        for (auto& c : created)
            next.push_back(std::move(c));
        facets = std::move(next);
    }
    return facets;
}

bool lex_less(const RatVec& a, const RatVec& b)
{
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

} // namespace

NewtonPolyhedron NewtonPolyhedron::from_points(std::size_t dim, std::vector<RatVec> points)
{
    if (dim == 0)
        throw InvalidInput("ambient dimension must be at least 1");
    if (dim > kMaxHullDim)
        throw Unsupported("hull supports dimension <= " + std::to_string(kMaxHullDim) + ", got "
                          + std::to_string(dim));
    if (points.empty())
        throw InvalidInput("Newton polyhedron of an empty point set");
    for (const auto& p : points) {
        if (p.size() != dim)
            throw InvalidInput("point dimension mismatch");
        for (const auto& x : p)
            if (x.sign() < 0)
                throw InvalidInput("negative coordinate in Newton polyhedron input");
    }
    points = minimalize(std::move(points));

    // Rays: axes first, then homogenized points scaled to integers.
    const std::size_t d = dim + 1;
    std::vector<IntVec> rays;
    for (std::size_t i = 0; i < dim; ++i) {
        IntVec e(d, 0);
        e[i] = 1;
        rays.push_back(std::move(e));
    }
    for (const auto& p : points) {
        Int den = 1;
        for (const auto& x : p)
            den = lcm(den, x.den());
        IntVec r(d);
        for (std::size_t i = 0; i < dim; ++i)
            r[i] = p[i].num() * (den / p[i].den());
        r[dim] = den;
        rays.push_back(std::move(r));
    }

    std::vector<ConeFacet> cone = cone_facets(rays);

    NewtonPolyhedron poly;
    poly.dim_ = dim;

    // A point is a vertex iff the facets through it have rank dim.
    for (std::size_t i = 0; i < points.size(); ++i) {
        std::vector<IntVec> through;
        for (const auto& f : cone)
            if (f.incident.test(dim + i))
                through.push_back(f.normal);
        if (through.size() >= dim && integer_rank(through, d) == dim)
            poly.vertices_.push_back(points[i]);
    }
    std::sort(poly.vertices_.begin(), poly.vertices_.end(), lex_less);

    for (const auto& f : cone) {
        std::vector<std::int64_t> u(dim);
        Int g = 0;
        for (std::size_t i = 0; i < dim; ++i)
            g = gcd(g, f.normal[i]);
        if (g == 0)
            continue; // face at infinity
        for (std::size_t i = 0; i < dim; ++i) {
            Int ui = f.normal[i] / g;
            if (ui < 0 || !ui.fits_slong_p())
                throw InternalError("hull produced an invalid facet normal");
            u[i] = ui.get_si();
        }
        Facet facet{WeightVec(std::move(u)), Rat(-f.normal[dim], g), {}};
        for (std::size_t v = 0; v < poly.vertices_.size(); ++v)
            if (dot(facet.normal, poly.vertices_[v]) == facet.offset)
                facet.vertex_ids.push_back(v);
        poly.facets_.push_back(std::move(facet));
    }
    std::sort(poly.facets_.begin(), poly.facets_.end(),
              [](const Facet& a, const Facet& b) { return a.normal < b.normal; });
    return poly;
}

} // namespace lojex
