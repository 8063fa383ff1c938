#include "generators.hpp"

#include "lojex/closure.hpp"
#include "lojex/error.hpp"
#include "lojex/exponent.hpp"
#include "lojex/oracle.hpp"

#include <doctest.h>

using namespace lojex;
using lojex::testing::Rng;

namespace {

MonomialIdeal ideal2(std::initializer_list<ExpVec> g) { return MonomialIdeal(2, std::vector<ExpVec>(g)); }

FiltrationSpec linear2(std::initializer_list<LinearForm> forms)
{
    return FiltrationSpec(LinearFiltration{2, std::vector<LinearForm>(forms)});
}

std::vector<RatVec> points_of(const MonomialIdeal& a)
{
    std::vector<RatVec> pts;
    for (const auto& g : a.gens())
        pts.push_back(g.to_rat());
    return pts;
}

MonomialIdeal random_proper(Rng& rng, std::size_t dim, std::int64_t max_exp)
{
    for (;;) {
        auto I = testing::random_ideal(rng, dim, true, max_exp);
        if (I.is_proper())
            return I;
    }
}

FiltrationSpec random_filtration(Rng& rng, std::size_t dim)
{
    switch (testing::uniform(rng, 0, 2)) {
    case 0:
        return FiltrationSpec::power(random_proper(rng, dim, 6));
    case 1: {
        LinearFiltration l{dim, {}};
        auto k = testing::uniform(rng, 1, 3);
        for (int j = 0; j < k; ++j)
            l.constraints.push_back(
                {testing::random_weight(rng, dim, 5, true), Rat(testing::uniform(rng, 1, 12), testing::uniform(rng, 1, 3))});
        return FiltrationSpec(std::move(l));
    }
    default: {
        ProductFiltration p;
        auto k = testing::uniform(rng, 1, 2);
        for (int j = 0; j < k; ++j)
            p.factors.push_back({random_proper(rng, dim, 5),
                                 Rat(testing::uniform(rng, 1, 4), testing::uniform(rng, 1, 3))});
        return FiltrationSpec(std::move(p));
    }
    }
}

} // namespace

TEST_CASE("filtration support functions")
{
    auto a = linear2({{WeightVec{1, 2}, Rat(3)}});
    auto b = linear2({{WeightVec{2, 1}, Rat(5)}});
    CHECK(v_filtration(WeightVec{1, 2}, a) == 3);
    CHECK(v_filtration(WeightVec{1, 2}, b) == Rat(5, 2));

    auto I = ideal2({{4, 0}, {2, 3}, {0, 5}});
    for (auto u : {WeightVec{1, 1}, WeightVec{3, 2}, WeightVec{0, 1}})
        CHECK(v_filtration(u, FiltrationSpec::power(I)) == support(I, u));

    auto J = ideal2({{2, 0}, {0, 3}});
    FiltrationSpec prod(ProductFiltration{{{I, Rat(1, 2)}, {J, Rat(2)}}});
    CHECK(v_filtration(WeightVec{3, 2}, prod) == Rat(1, 2) * support(I, WeightVec{3, 2}) + 2 * support(J, WeightVec{3, 2}));

    CHECK_THROWS_AS(linear2({{WeightVec{1, 1}, Rat(0)}}), InvalidInput);
    CHECK_THROWS_AS(FiltrationSpec(ProductFiltration{}), InvalidInput);
}

TEST_CASE("asymptotic region of a linear filtration")
{
    auto region = asymptotic_region(linear2({{WeightVec{1, 2}, Rat(3)}, {WeightVec{2, 1}, Rat(3)}}));
    CHECK(region.vertices() == std::vector<RatVec>{{Rat(0), Rat(3)}, {Rat(1), Rat(1)}, {Rat(3), Rat(0)}});
    Rng rng(21);
    for (int trial = 0; trial < 100; ++trial) {
        auto spec = random_filtration(rng, 2 + trial % 2);
        auto region = asymptotic_region(spec);
        for (int k = 0; k < 10; ++k) {
            auto u = testing::random_weight(rng, spec.dim());
            CHECK(region.support(u) == v_filtration(u, spec));
        }
    }
}

TEST_CASE("Lojasiewicz exponent of monomial ideals")
{
    auto m2 = MonomialIdeal::maximal(2);
    CHECK(loj_ideal(MonomialIdeal::diagonal({2, 7, 3}), MonomialIdeal::maximal(3)).value == 7);

    auto r = loj_ideal(ideal2({{5, 0}, {2, 3}, {0, 7}}), m2);
    CHECK(r.value == 7);
    CHECK(r.maximizers == std::vector<WeightVec>{{2, 1}});

    auto s = loj_ideal(ideal2({{4, 0}, {2, 3}, {0, 5}}), m2);
    CHECK(s.value == 5);
    CHECK(s.maximizers == std::vector<WeightVec>{{5, 4}});
    CHECK(oracle::min_containment_power(m2, ideal2({{4, 0}, {2, 3}, {0, 5}}), 1, 20) == 5u);

    CHECK(loj_ideal(MonomialIdeal(1, {ExpVec{6}}), MonomialIdeal::maximal(1)).value == 6);
    CHECK_THROWS_AS(loj_ideal(ideal2({{2, 1}}), m2), InvalidInput);
    CHECK_THROWS_AS(loj_ideal(m2, ideal2({{0, 0}})), InvalidInput);
}

TEST_CASE("diagonal ideals have exponent max alpha")
{
    Rng rng(22);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t n = static_cast<std::size_t>(testing::uniform(rng, 1, 4));
        std::vector<std::int64_t> alpha(n);
        for (auto& x : alpha)
            x = testing::uniform(rng, 1, 12);
        auto r = loj_ideal(MonomialIdeal::diagonal(alpha), MonomialIdeal::maximal(n));
        CHECK(r.value == *std::max_element(alpha.begin(), alpha.end()));
    }
}

TEST_CASE("exponent matches the minimal containment power")
{
    Rng rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        auto a = random_proper(rng, 2, 7);
        auto b = testing::random_ideal(rng, 2, testing::uniform(rng, 0, 1) == 1, 3);
        if (!b.is_proper())
            continue;
        auto L = loj_ideal(a, b).value;
        for (unsigned p = 1; p <= 6; ++p) {
            auto expected = (Rat(p) * L).ceil().get_ui();
            auto q = oracle::min_containment_power(b, a, p, static_cast<unsigned>(expected) + 1);
            REQUIRE(q);
            CHECK(*q == expected);
        }
    }
}

TEST_CASE("exponent is a closure invariant and bounds every valuation ratio")
{
    Rng rng(24);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t dim = trial % 4 == 3 ? 3 : 2;
        auto a = random_proper(rng, dim, 6);
        auto b = testing::random_ideal(rng, dim, true, 3);
        if (!b.is_proper())
            continue;
        auto r = loj_ideal(a, b);
        CHECK(loj_ideal(closure_generators(a), closure_generators(b)).value == r.value);
        for (int k = 0; k < 10; ++k) {
            auto u = testing::random_weight(rng, dim, 20, true);
            CHECK(support(a, u) / support(b, u) <= r.value);
        }
        for (const auto& u : r.maximizers)
            CHECK(support(a, u) / support(b, u) == r.value);
    }
}

TEST_CASE("filtration exponent")
{
    auto a = linear2({{WeightVec{1, 2}, Rat(3)}});
    auto b = linear2({{WeightVec{2, 1}, Rat(5)}});
    auto r = loj_filtration(a, b);
    CHECK(r.value == Rat(6, 5));
    CHECK(r.maximizers == std::vector<WeightVec>{{1, 2}});
    CHECK_FALSE(r.lower_bound_only);
    CHECK_FALSE(r.infinite);

    auto I = ideal2({{5, 0}, {2, 3}, {0, 7}});
    auto m = MonomialIdeal::maximal(2);
    CHECK(loj_filtration(FiltrationSpec::power(I), FiltrationSpec::power(m)).value == 7);
    FiltrationSpec single(ProductFiltration{{{I, Rat(1)}}});
    auto pr = loj_filtration(single, FiltrationSpec::power(m));
    CHECK(pr.value == 7);
    CHECK(pr.maximizers == loj_ideal(I, m).maximizers);

    // Non-power pair in three variables: flagged.
    FiltrationSpec three(LinearFiltration{3, {{WeightVec{1, 1, 1}, Rat(2)}}});
    auto t = loj_filtration(three, FiltrationSpec::power(MonomialIdeal::maximal(3)));
    CHECK(t.lower_bound_only);
    CHECK(t.value == 2);

    // a not m-primary along y while b vanishes there: infinite.
    auto inf = loj_filtration(FiltrationSpec::power(ideal2({{0, 1}})), FiltrationSpec::power(ideal2({{1, 0}})));
    CHECK(inf.infinite);
}

TEST_CASE("random filtration pairs in the plane")
{
    Rng rng(25);
    for (int trial = 0; trial < 100; ++trial) {
        auto a = random_filtration(rng, 2);
        auto b = random_filtration(rng, 2);
        auto r = loj_filtration(a, b);
        REQUIRE_FALSE(r.infinite);
        for (int k = 0; k < 10; ++k) {
            auto u = testing::random_weight(rng, 2, 30, true);
            CHECK(v_filtration(u, a) / v_filtration(u, b) <= r.value);
        }
        CHECK(lct(a) * r.value >= lct(b));
    }
}

TEST_CASE("log canonical threshold")
{
    for (std::size_t d = 1; d <= 4; ++d) {
        auto m = MonomialIdeal::maximal(d);
        CHECK(lct(m) == Rat(static_cast<long>(d)));
        for (unsigned k = 1; k <= 4; ++k)
            CHECK(lct(power(m, k)) == Rat(static_cast<long>(d), static_cast<long>(k)));
    }
    auto I = ideal2({{2, 0}, {0, 3}});
    CHECK(lct(I) == Rat(5, 6));
    CHECK(oracle::diagonal_threshold(points_of(I)) == Rat(6, 5));
    CHECK_THROWS_AS(lct(ideal2({{1, 1}})), InvalidInput);

    Rng rng(26);
    for (int trial = 0; trial < 100; ++trial) {
        auto a = testing::random_ideal(rng, 2 + trial % 3, true, 6);
        if (!a.is_proper())
            continue;
        CHECK(lct(a) == oracle::diagonal_threshold(points_of(a)).inverse());
    }
}

TEST_CASE("theta and rigidity")
{
    for (std::size_t d = 2; d <= 3; ++d)
        for (unsigned k = 1; k <= 4; ++k) {
            auto t = theta(power(MonomialIdeal::maximal(d), k));
            CHECK(t.theta == 1);
            CHECK(t.rigid);
            REQUIRE(t.diagonal_facet);
            CHECK(t.diagonal_facet->second == Rat(static_cast<long>(k)));
        }
    auto t = theta(ideal2({{2, 0}, {0, 3}}));
    CHECK(t.lct == Rat(5, 6));
    CHECK(t.loj_m == 3);
    CHECK(t.theta == Rat(5, 4));
    CHECK_FALSE(t.rigid);
    auto c = theta(ideal2({{3, 0}, {0, 3}}));
    CHECK(c.theta == 1);
    CHECK(c.rigid);

    // A diagonal facet that does not attain the exponent: x^2, xy, y^5 has
    // facets (1,1)/2 and (4,1)/5.
    auto p = theta(ideal2({{2, 0}, {1, 1}, {0, 5}}));
    REQUIRE(p.diagonal_facet);
    CHECK_FALSE(p.rigid);
    CHECK(p.theta > 1);

    Rng rng(27);
    for (int trial = 0; trial < 200; ++trial) {
        auto a = testing::random_ideal(rng, 2 + trial % 2, true, 7);
        if (!a.is_proper())
            continue;
        auto r = theta(a);
        CHECK(r.theta >= 1);
        CHECK((r.theta == 1) == r.rigid);
        CHECK(r.lct * r.loj_m >= Rat(static_cast<long>(a.dim())));
    }
}

TEST_CASE("sharpness construction")
{
    auto one = sharpness_witness({WeightVec{1, 1}});
    CHECK(one.N == 3);
    CHECK(one.q == 3);
    CHECK(one.witness_value == Rat(1, 3));
    CHECK(one.condition1);
    CHECK(one.witness_outside);

    auto two = sharpness_witness({WeightVec{1, 2}});
    CHECK(two.N == 2);
    CHECK(two.q == 2);
    CHECK(two.witness_value == Rat(1, 2));

    Rng rng(28);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<WeightVec> V;
        auto k = testing::uniform(rng, 1, 4);
        for (int j = 0; j < k; ++j)
            V.push_back(testing::random_weight(rng, 2, 9, true));
        auto p = testing::uniform(rng, 1, 3);
        auto w = sharpness_witness(V, p);
        CHECK(w.condition1);
        CHECK(w.witness_outside);
        CHECK(w.witness_value < Rat(p));
        for (const auto& v : V)
            CHECK(Rat(w.q) * Rat(std::min(v[0], v[1])) >= Rat(w.N * v[0] * p));
    }
    CHECK_THROWS_AS(sharpness_witness({WeightVec{0, 1}}), InvalidInput);
    CHECK_THROWS_AS(sharpness_witness({}), InvalidInput);
}
