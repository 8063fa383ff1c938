#include "generators.hpp"

#include "lojex/error.hpp"
#include "lojex/infinity.hpp"
#include "lojex/oracle.hpp"

#include <doctest.h>

using namespace lojex;
using lojex::testing::Rng;

namespace {

Polynomial poly(std::initializer_list<std::pair<ExpVec, Rat>> terms)
{
    Polynomial p;
    for (const auto& [e, c] : terms)
        p[e] += c;
    return p;
}

Polynomial swap_xy(const Polynomial& f)
{
    Polynomial g;
    for (const auto& [e, c] : f)
        g[ExpVec{e[1], e[0]}] = c;
    return g;
}

PolyMap swap_xy(const PolyMap& F)
{
    std::vector<Polynomial> out;
    for (const auto& f : F.components())
        out.push_back(swap_xy(f));
    return PolyMap(2, out);
}

Polynomial random_poly(Rng& rng)
{
    Polynomial p;
    auto terms = testing::uniform(rng, 1, 4);
    for (int k = 0; k < terms; ++k)
        p[ExpVec{testing::uniform(rng, 0, 4), testing::uniform(rng, 0, 4)}] = Rat(testing::uniform(rng, -3, 3));
    std::erase_if(p, [](const auto& t) { return t.second.is_zero(); });
    if (p.empty())
        p[ExpVec{1, 1}] = 1;
    return p;
}

// Product of f with (x^w2 - r y^w1) pushes a common factor onto the w-face.
Polynomial times_binomial(const Polynomial& f, std::int64_t w1, std::int64_t w2, const Rat& r)
{
    Polynomial out;
    for (const auto& [e, c] : f) {
        out[ExpVec{e[0] + w2, e[1]}] += c;
        out[ExpVec{e[0], e[1] + w1}] -= c * r;
    }
    std::erase_if(out, [](const auto& t) { return t.second.is_zero(); });
    return out;
}

} // namespace

TEST_CASE("univariate polynomials")
{
    UniPoly p({Rat(-1), Rat(0), Rat(1)}); // z^2 - 1
    UniPoly q({Rat(1), Rat(1)});          // z + 1
    CHECK(poly_gcd(p, q) == q);
    CHECK(poly_gcd(p, UniPoly({Rat(2), Rat(1)})) == UniPoly({Rat(1)}));
    CHECK(poly_gcd(UniPoly(), UniPoly()).is_zero());
    CHECK(p.str() == "z^2 - 1");
    CHECK(UniPoly({Rat(3, 2), Rat(-2), Rat(0), Rat(1)}).str() == "z^3 - 2*z + 3/2");
    CHECK(rational_roots(p) == std::vector<Rat>{Rat(-1), Rat(1)});
    // 6z^3 - 5z^2 - 2z + 1 = (z - 1)(2z + 1)(3z - 1)
    CHECK(rational_roots(UniPoly({Rat(1), Rat(-2), Rat(-5), Rat(6)})) ==
          std::vector<Rat>{Rat(-1, 2), Rat(1, 3), Rat(1)});
    CHECK(rational_roots(UniPoly({Rat(0), Rat(2), Rat(0), Rat(1)})) == std::vector<Rat>{Rat(0)});
    CHECK(poly_rem(UniPoly({Rat(1), Rat(0), Rat(1)}), q) == UniPoly({Rat(2)}));
    CHECK(oracle::common_factor_degree({p, q}) == 1);
    CHECK(oracle::common_factor_degree({p, UniPoly({Rat(-1), Rat(0), Rat(0), Rat(1)})}) == 1);
    CHECK(oracle::common_factor_degree({p, p}) == 2);
}

TEST_CASE("Newton polyhedron at infinity")
{
    PolyMap id(2, {poly({{{1, 0}, 1}}), poly({{{0, 1}, 1}})});
    auto g = gamma_infinity(id);
    CHECK(g.vertices() == std::vector<RatVec>{RatVec{Rat(0), Rat(0)}});
    // The origin is part of the hull, so the orthant absorbs every support.
    PolyMap one(2, {poly({{{2, 1}, 1}, {{1, 3}, 1}})});
    CHECK(gamma_infinity(one).vertices().size() == 1);
    CHECK(gamma_infinity(one).facets().size() == 2);
}

TEST_CASE("nondegeneracy verdicts")
{
    PolyMap id(2, {poly({{{1, 0}, 1}}), poly({{{0, 1}, 1}})});
    auto a = nondegenerate_at_infinity(id);
    CHECK(a.nondegenerate);
    CHECK_FALSE(a.offending);

    auto xy = poly({{{1, 0}, 1}, {{0, 1}, 1}});
    PolyMap same(2, {xy, xy});
    auto b = nondegenerate_at_infinity(same);
    CHECK_FALSE(b.nondegenerate);
    REQUIRE(b.offending);
    CHECK(*b.offending == WeightVec{1, 1});
    CHECK(b.checks.front().gcd == UniPoly({Rat(1), Rat(1)}));
    CHECK(face_system_vanishes(same, WeightVec{1, 1}, Rat(-1)));

    PolyMap diff(2, {xy, poly({{{1, 0}, 1}, {{0, 1}, -1}})});
    auto c = nondegenerate_at_infinity(diff);
    CHECK(c.nondegenerate);
    CHECK(c.checks.front().gcd == UniPoly({Rat(1)}));

    // A single component with an edge always vanishes somewhere on that edge.
    PolyMap single(2, {poly({{{2, 0}, 1}, {{0, 3}, 1}})});
    CHECK_FALSE(nondegenerate_at_infinity(single).nondegenerate);
    // Constant terms give a monomial face for every w > 0.
    PolyMap unit(2, {poly({{{0, 0}, 1}, {{2, 0}, 1}, {{0, 3}, 1}})});
    CHECK(nondegenerate_at_infinity(unit).nondegenerate);

    CHECK_THROWS_AS(nondegenerate_at_infinity(PolyMap(3, {poly({{{1, 0, 0}, 1}})})), Unsupported);
    CHECK_THROWS_AS(PolyMap(2, {}), InvalidInput);
    CHECK_THROWS_AS(PolyMap(2, {poly({{{1, 0}, 0}})}), InvalidInput);
    CHECK_THROWS_AS(PolyMap(2, {poly({{{1, 0, 0}, 1}})}), InvalidInput);
}

TEST_CASE("random maps against the dehomogenized oracle")
{
    Rng rng(51);
    int degenerate = 0;
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<Polynomial> comps;
        auto r = testing::uniform(rng, 1, 3);
        for (int j = 0; j < r; ++j)
            comps.push_back(random_poly(rng));
        if (trial % 3 == 0) {
            // Plant a shared face factor for a random w.
            auto w1 = testing::uniform(rng, 1, 2), w2 = testing::uniform(rng, 1, 2);
            Rat root(testing::uniform(rng, 1, 3));
            for (auto& f : comps)
                f = times_binomial(f, w1, w2, root);
        }
        PolyMap F(2, comps);
        auto rep = nondegenerate_at_infinity(F);
        // Exponents stay below 7, so every edge normal lies in [1, 7]^2.
        auto brute = oracle::brute_degenerate_weight(F, 7);
        CHECK(rep.nondegenerate == !brute.has_value());
        degenerate += !rep.nondegenerate;

        // Swapping x and y mirrors the verdict.
        CHECK(nondegenerate_at_infinity(swap_xy(F)).nondegenerate == rep.nondegenerate);

        for (const auto& ch : rep.checks) {
            if (ch.monomial_face)
                continue;
            if (ch.degenerate) {
                // A rational common root is a genuine torus zero.
                auto roots = rational_roots(ch.gcd);
                REQUIRE(roots);
                for (const auto& z : *roots)
                    CHECK(face_system_vanishes(F, ch.w, z));
            } else {
                for (const auto& p : ch.faces) {
                    auto roots = rational_roots(p);
                    REQUIRE(roots);
                    for (const auto& z : *roots)
                        CHECK_FALSE(face_system_vanishes(F, ch.w, z));
                }
            }
        }
    }
    CHECK(degenerate > 50);
}

TEST_CASE("finite minimum over divisor tables")
{
    DivisorTable t1({{"E1", 2, 3}, {"E2", 1, 1}});
    auto m = loj_infinity_min(t1);
    CHECK(m.value == 1);
    CHECK(m.argmin == std::vector<std::string>{"E2"});
    CHECK(loj_infinity_min(DivisorTable({{"E1", 1, 0}, {"E2", 1, 5}})).value == 0);
    CHECK(loj_infinity_min(DivisorTable({{"E", 1, 5}})).value == 5);
    // Rows off Supp(A) do not count.
    CHECK(loj_infinity_min(DivisorTable({{"E1", 0, 0}, {"E2", 3, 2}})).value == Rat(2, 3));

    CHECK(loj_infinity_local(t1, {"E1"}) == ExtRat{false, Rat(3, 2)});
    CHECK(loj_infinity_local(DivisorTable({{"E1", 0, 4}, {"E2", 1, 1}}), {"E1"}).infinite);
    CHECK(loj_infinity_local(t1, {}).str() == "inf");
    CHECK_THROWS_AS(loj_infinity_local(t1, {"E9"}), InvalidInput);

    CHECK_THROWS_AS(DivisorTable({{"E", 0, 3}}), InvalidInput);
    CHECK_THROWS_AS(DivisorTable({{"E", 1, -1}}), InvalidInput);
    CHECK_THROWS_AS(DivisorTable({{"E", 1, 1}, {"E", 2, 1}}), InvalidInput);

    Rng rng(52);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<DivisorRow> rows;
        auto n = testing::uniform(rng, 1, 6);
        for (int i = 0; i < n; ++i)
            rows.push_back({"E" + std::to_string(i), testing::uniform(rng, i == 0 ? 1 : 0, 6), testing::uniform(rng, 0, 6)});
        DivisorTable T(rows);
        Rat v = loj_infinity_min(T).value;

        // Raising an ord_Y never lowers the minimum.
        auto up = rows;
        up[static_cast<std::size_t>(testing::uniform(rng, 0, n - 1))].ord_y += testing::uniform(rng, 1, 3);
        CHECK(loj_infinity_min(DivisorTable(up)).value >= v);
        // Scaling every row leaves it unchanged.
        auto k = testing::uniform(rng, 2, 5);
        auto sc = rows;
        for (auto& r : sc) {
            r.ord_x *= k;
            r.ord_y *= k;
        }
        CHECK(loj_infinity_min(DivisorTable(sc)).value == v);
        // Zero exactly when some row of Supp(A) has ord_Y = 0.
        bool zero = std::any_of(rows.begin(), rows.end(), [](const DivisorRow& r) { return r.ord_x > 0 && r.ord_y == 0; });
        CHECK(v.is_zero() == zero);
        // The global value is the minimum of the local ones over all labels.
        std::set<std::string> all;
        for (const auto& r : rows)
            all.insert(r.label);
        CHECK(loj_infinity_local(T, all) == ExtRat{false, v});
        for (const auto& r : rows) {
            auto loc = loj_infinity_local(T, {r.label});
            CHECK((loc.infinite || loc.value >= v));
        }
    }
}
