#include "lojex/error.hpp"
#include "lojex/geometry.hpp"

#include <algorithm>

namespace lojex {

namespace {

Rat det2(const RatVec& a, const RatVec& b) { return a[0] * b[1] - a[1] * b[0]; }

Rat det3(const RatVec& a, const RatVec& b, const RatVec& c)
{
    return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0])
           + a[2] * (b[0] * c[1] - b[1] * c[0]);
}

// Orders the vertices of a planar convex polygon in 3-space cyclically.
std::vector<RatVec> cyclic_order(std::vector<RatVec> pts, const WeightVec& normal)
{
    // Project along the axis where the normal is largest; the projection is
    // injective on the facet since that normal coordinate is nonzero.
    std::size_t drop = 0;
    for (std::size_t i = 1; i < 3; ++i)
        if (normal[i] > normal[drop])
            drop = i;
    auto proj = [&](const RatVec& p) {
        RatVec q;
        for (std::size_t i = 0; i < 3; ++i)
            if (i != drop)
                q.push_back(p[i]);
        return q;
    };
    RatVec centre{Rat(0), Rat(0)};
    for (const auto& p : pts) {
        auto q = proj(p);
        centre[0] += q[0];
        centre[1] += q[1];
    }
    centre[0] /= Rat(static_cast<long>(pts.size()));
    centre[1] /= Rat(static_cast<long>(pts.size()));

    auto half = [](const RatVec& d) { return d[1].sign() > 0 || (d[1].is_zero() && d[0].sign() > 0) ? 0 : 1; };
    auto rel = [&](const RatVec& p) {
        auto q = proj(p);
        return RatVec{q[0] - centre[0], q[1] - centre[1]};
    };
    std::sort(pts.begin(), pts.end(), [&](const RatVec& a, const RatVec& b) {
        auto da = rel(a), db = rel(b);
        int ha = half(da), hb = half(db);
        if (ha != hb)
            return ha < hb;
        return det2(da, db).sign() > 0;
    });
    return pts;
}

} // namespace

Rat covolume(const NewtonPolyhedron& p)
{
    const std::size_t n = p.dim();
    if (n > 3)
        throw Unsupported("covolume supports dimension <= 3");
    if (!p.bounded_complement())
        throw InvalidInput("covolume of a polyhedron whose complement is unbounded (not m-primary)");

    // The complement is the union of the pyramids with apex 0 over the
    // facets with positive offset; each pyramid is fan-triangulated.
    Rat vol = 0;
    for (const auto& f : p.facets()) {
        if (f.offset.sign() <= 0)
            continue;
        std::vector<RatVec> pts;
        for (auto id : f.vertex_ids)
            pts.push_back(p.vertices()[id]);
        if (n == 1) {
            vol += pts.front()[0];
        } else if (n == 2) {
            if (pts.size() != 2)
                throw InternalError("planar facet without two vertices");
            vol += det2(pts[0], pts[1]).abs() / Rat(2);
        } else {
            pts = cyclic_order(std::move(pts), f.normal);
            for (std::size_t i = 1; i + 1 < pts.size(); ++i)
                vol += det3(pts[0], pts[i], pts[i + 1]).abs() / Rat(6);
        }
    }
    return vol;
}

} // namespace lojex
