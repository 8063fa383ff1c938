#include "generators.hpp"

#include "lojex/closure.hpp"
#include "lojex/error.hpp"
#include "lojex/oracle.hpp"

#include <doctest.h>

using namespace lojex;
using lojex::testing::Rng;

namespace {

MonomialIdeal ideal2(std::initializer_list<ExpVec> g) { return MonomialIdeal(2, std::vector<ExpVec>(g)); }

std::vector<RatVec> points_of(const MonomialIdeal& a, unsigned p = 1)
{
    std::vector<RatVec> pts;
    for (const auto& g : a.gens()) {
        RatVec x = g.to_rat();
        for (auto& c : x)
            c *= Rat(p);
        pts.push_back(std::move(x));
    }
    return pts;
}

// Every lattice point of the vertex box, in a fixed order.
std::vector<ExpVec> box_points(const NewtonPolyhedron& poly)
{
    const std::size_t n = poly.dim();
    std::vector<std::int64_t> box(n, 0);
    for (const auto& v : poly.vertices())
        for (std::size_t i = 0; i < n; ++i)
            box[i] = std::max(box[i], v[i].ceil().get_si());
    std::vector<ExpVec> out;
    std::vector<std::int64_t> cur(n, 0);
    for (;;) {
        out.emplace_back(cur);
        std::size_t i = 0;
        while (i < n && cur[i] == box[i])
            cur[i++] = 0;
        if (i == n)
            return out;
        ++cur[i];
    }
}

} // namespace

TEST_CASE("closure generators")
{
    CHECK(closure_generators(ideal2({{2, 0}, {0, 3}})).gens() == std::vector<ExpVec>{{0, 3}, {1, 2}, {2, 0}});
    CHECK(closure_generators(ideal2({{2, 0}, {0, 4}})).gens() == std::vector<ExpVec>{{0, 4}, {1, 2}, {2, 0}});
    auto closed = ideal2({{2, 0}, {1, 1}, {0, 2}});
    CHECK(closure_generators(closed) == closed);
    // Not m-primary: (x^2 y) is already closed.
    auto principal = ideal2({{2, 1}});
    CHECK(closure_generators(principal) == principal);
    // (x^4, x^2y^3, y^5): facet 5i + 4j >= 20.
    CHECK(closure_generators(ideal2({{4, 0}, {2, 3}, {0, 5}})).gens() ==
          std::vector<ExpVec>{{0, 5}, {1, 4}, {2, 3}, {3, 2}, {4, 0}});
}

TEST_CASE("closure generators are the minimal lattice points of NP")
{
    Rng rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        auto I = testing::random_ideal(rng, trial % 2 ? 3 : 2, true, 5);
        auto closure = closure_generators(I);
        auto poly = newton_polyhedron(I);
        auto pts = points_of(I);
        for (const auto& g : closure.gens()) {
            CHECK(oracle::hull_member(pts, g.to_rat()));
            for (std::size_t i = 0; i < g.size(); ++i) {
                if (g[i] == 0)
                    continue;
                auto c = g.coords();
                --c[i];
                CHECK_FALSE(oracle::hull_member(pts, ExpVec(c).to_rat()));
            }
        }
        // Every lattice member of NP is divisible by some closure generator.
        for (const auto& m : box_points(poly))
            CHECK(closure.contains(m) == oracle::hull_member(pts, m.to_rat()));
    }
}

TEST_CASE("closure generators are idempotent")
{
    Rng rng(12);
    for (int trial = 0; trial < 200; ++trial) {
        auto I = testing::random_ideal(rng, trial % 2 ? 3 : 2, trial % 5 != 0, 6);
        auto c = closure_generators(I);
        CHECK(closure_generators(c) == c);
        CHECK(newton_polyhedron(c) == newton_polyhedron(I));
    }
}

TEST_CASE("containment in the closure of a power")
{
    auto a = ideal2({{4, 0}, {2, 3}, {0, 5}});
    auto m = MonomialIdeal::maximal(2);

    auto c6 = contains_closure(m, 6, a, 1);
    CHECK(c6.member);
    CHECK(std::holds_alternative<ConvexCertificate>(c6.witness));
    CHECK(c6.recheck(newton_polyhedron(a).vertices()));

    auto c5 = contains_closure(m, 5, a, 1);
    CHECK(c5.member);
    CHECK(c5.recheck(newton_polyhedron(a).vertices()));

    auto c4 = contains_closure(m, 4, a, 1);
    REQUIRE_FALSE(c4.member);
    const auto& v = std::get<ViolatedFacet>(c4.witness);
    CHECK(v.normal == WeightVec{5, 4});
    CHECK(v.offset == 20);
    // x^iy^(4-i): 20 - (5i + 4(4-i)) = 4 - i, worst at i = 0.
    CHECK(v.monomial == ExpVec{0, 4});
    CHECK(v.deficit == 4);
    CHECK(c4.recheck(newton_polyhedron(a).vertices()));

    CHECK(oracle::min_containment_power(m, a, 1, 10) == 5u);

    CHECK(contains_closure(a, 1, a, 1).member);
    CHECK(contains_closure(a, 3, a, 3).member);

    CHECK_THROWS_AS(contains_closure(m, 65, a, 1), Unsupported);
    CHECK_THROWS_AS(contains_closure(m, 0, a, 1), InvalidInput);
    CHECK_THROWS_AS(contains_closure(MonomialIdeal::maximal(3), 1, a, 1), InvalidInput);
}

TEST_CASE("tampered certificates fail the recheck")
{
    auto a = ideal2({{4, 0}, {2, 3}, {0, 5}});
    auto m = MonomialIdeal::maximal(2);
    auto target = newton_polyhedron(a).vertices();

    auto bad = contains_closure(m, 4, a, 1);
    std::get<ViolatedFacet>(bad.witness).deficit = 3;
    CHECK_FALSE(bad.recheck(target));

    auto good = contains_closure(m, 6, a, 1);
    auto& items = std::get<ConvexCertificate>(good.witness).items;
    items.front().slack.front() += Rat(1);
    CHECK_FALSE(good.recheck(target));
}

TEST_CASE("containment agrees with the brute-force oracle")
{
    Rng rng(13);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t dim = trial % 3 == 2 ? 3 : 2;
        auto a = testing::random_ideal(rng, dim, true, 6);
        auto b = testing::random_ideal(rng, dim, true, 3);
        if (!b.is_proper())
            continue;
        unsigned p = static_cast<unsigned>(testing::uniform(rng, 1, 3));
        auto oracle_q = oracle::min_containment_power(b, a, p, 24);
        REQUIRE(oracle_q);
        CHECK(contains_closure(b, *oracle_q, a, p).member);
        if (*oracle_q > 1)
            CHECK_FALSE(contains_closure(b, *oracle_q - 1, a, p).member);
    }
}

TEST_CASE("containment is monotone in q and invariant under scaling")
{
    Rng rng(14);
    for (int trial = 0; trial < 80; ++trial) {
        auto a = testing::random_ideal(rng, 2, true, 6);
        auto b = testing::random_ideal(rng, 2, true, 3);
        if (!b.is_proper())
            continue;
        unsigned p = static_cast<unsigned>(testing::uniform(rng, 1, 3));
        for (unsigned q = 1; q <= 6; ++q) {
            auto c = contains_closure(b, q, a, p);
            CHECK(c.recheck(scale(newton_polyhedron(a), Rat(p)).vertices()));
            if (c.member)
                CHECK(contains_closure(b, q + 1, a, p).member);
            for (unsigned t = 2; t <= 3; ++t)
                CHECK(contains_closure(b, q * t, a, p * t).member == c.member);
        }
    }
}

TEST_CASE("power oracle")
{
    auto I = ideal2({{2, 0}, {0, 3}});
    auto r = power_oracle_member(I, ExpVec{1, 2});
    CHECK(r.member);
    CHECK(r.k == 2);
    REQUIRE(r.certificate);
    ClosureCertificate cert{true, *r.certificate};
    CHECK(cert.recheck(points_of(I)));

    auto no = power_oracle_member(I, ExpVec{1, 1});
    CHECK_FALSE(no.member);
    CHECK_FALSE(no.k);

    auto gen = power_oracle_member(I, ExpVec{0, 3});
    CHECK(gen.member);
    CHECK(gen.k == 1);
}

TEST_CASE("power oracle agrees with Newton polyhedron membership")
{
    Rng rng(15);
    for (int trial = 0; trial < 100; ++trial) {
        auto I = testing::random_ideal(rng, trial % 4 == 3 ? 3 : 2, true, trial % 4 == 3 ? 4 : 6);
        auto poly = newton_polyhedron(I);
        auto pts = points_of(I);
        for (const auto& m : box_points(poly)) {
            auto r = power_oracle_member(I, m);
            CHECK(r.member == member(poly, m));
            if (r.member) {
                REQUIRE(r.certificate);
                ClosureCertificate cert{true, *r.certificate};
                CHECK(cert.recheck(pts));
            }
        }
    }
}
