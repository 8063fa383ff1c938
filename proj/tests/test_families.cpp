#include "generators.hpp"

#include "lojex/error.hpp"
#include "lojex/families.hpp"

#include <doctest.h>

using namespace lojex;
using lojex::testing::Rng;

namespace {

FamilyCandidate cand(std::vector<std::int64_t> label, Rat a0, Rat a1, Rat b0, Rat b1)
{
    return {std::move(label), std::move(a0), std::move(a1), std::move(b0), std::move(b1)};
}

FamilySpec ex_change()
{
    return FamilySpec({cand({3, 2}, 12, 0, 7, 3), cand({1, 1}, 5, 0, 3, 1)});
}

Rat random_coeff(Rng& rng, std::int64_t lo, std::int64_t hi)
{
    return Rat(testing::uniform(rng, lo, hi), testing::uniform(rng, 1, 4));
}

// Positive alpha, beta on [0, 1].
FamilySpec random_family(Rng& rng)
{
    std::vector<FamilyCandidate> out;
    auto n = testing::uniform(rng, 1, 6);
    for (int i = 0; i < n; ++i) {
        Rat a0 = random_coeff(rng, 1, 12), b0 = random_coeff(rng, 1, 12);
        Rat a1 = random_coeff(rng, -4, 8), b1 = random_coeff(rng, -4, 8);
        if ((a0 + a1).sign() <= 0)
            a1 = 0;
        if ((b0 + b1).sign() <= 0)
            b1 = 0;
        out.push_back(cand({i}, a0, a1, b0, b1));
    }
    return FamilySpec(std::move(out));
}

// k rationals strictly inside (lo, hi).
std::vector<Rat> interior_points(const Surd& lo, const Surd& hi, int k)
{
    Rat width = 1;
    for (;;) {
        auto bl = lo.bounds(width);
        auto bh = hi.bounds(width);
        if (bl.second < bh.first) {
            std::vector<Rat> pts;
            for (int i = 1; i <= k; ++i)
                pts.push_back(bl.second + (bh.first - bl.second) * Rat(i, k + 1));
            return pts;
        }
        width /= Rat(16);
    }
}

} // namespace

TEST_CASE("quadratic surds")
{
    Surd r2(Rat(0), Rat(1), Int(8)); // 2 sqrt 2
    CHECK(r2.d() == 2);
    CHECK(r2.b() == 2);
    CHECK(Surd(Rat(1), Rat(1), Int(9)) == Surd(Rat(4)));
    CHECK((r2 * r2) == Surd(Rat(8)));
    CHECK(Surd(Rat(3), Rat(-2), Int(2)).sign() > 0); // 3 - 2.83
    CHECK(Surd(Rat(2), Rat(-2), Int(2)).sign() < 0);
    Surd s3(Rat(0), Rat(1), Int(3)), s2(Rat(0), Rat(1), Int(2));
    CHECK(s2 < s3);
    CHECK(Surd(Rat(7, 5)) < s2);
    CHECK(s2 < Surd(Rat(17, 12)));
    auto [lo, hi] = s3.bounds(Rat(1, 1000));
    CHECK(lo <= Rat(17320, 10000));
    CHECK(hi >= Rat(17321, 10000));
    CHECK(hi - lo <= Rat(1, 1000));
    CHECK(Surd(Rat(1, 2), Rat(-3, 4), Int(5)).str() == "1/2-3/4*sqrt(5)");
}

TEST_CASE("walls and chambers of the change-of-maximizer family")
{
    auto spec = ex_change();
    CHECK(walls(spec) == std::vector<Surd>{Surd(Rat(1, 3))});

    auto rep = analyze(spec);
    REQUIRE(rep.chambers.size() == 2);
    CHECK(rep.chambers[0].maximizers == std::vector<std::size_t>{0});
    CHECK(rep.chambers[1].maximizers == std::vector<std::size_t>{1});
    CHECK(rep.wall_maximizers[0].maximizers == std::vector<std::size_t>{0, 1});
    CHECK(rep.wall_maximizers[0].continuous);
    CHECK(rep.L0 == Rat(12, 7));
    CHECK(rep.L1 == Rat(5, 4));
    CHECK(rep.maximizers0 == std::vector<std::size_t>{0});
    CHECK(rep.maximizers1 == std::vector<std::size_t>{1});
    // Each chamber's 1/L is affine, but the two affine functions differ.
    CHECK(rep.chambers[0].inv_affine);
    CHECK(rep.chambers[1].inv_affine);
    CHECK_FALSE(rep.inv_L_affine);
}

TEST_CASE("degenerate families")
{
    auto single = FamilySpec({cand({1, 1}, 5, 0, 3, 1)});
    CHECK(walls(single).empty());
    auto r = analyze(single);
    CHECK(r.chambers.size() == 1);
    CHECK(r.inv_L_affine);

    auto same = FamilySpec({cand({1, 1}, 5, 1, 3, 1), cand({2, 1}, 5, 1, 3, 1)});
    CHECK(walls(same).empty());
    CHECK(analyze(same).chambers[0].maximizers == std::vector<std::size_t>{0, 1});

    // Proportional alpha and beta: 1/L constant.
    auto prop = FamilySpec({cand({1, 1}, 2, 2, 1, 1)});
    CHECK(analyze(prop).inv_L_affine);
    // Curved 1/L.
    auto curved = FamilySpec({cand({1, 1}, 1, 1, 1, 0)});
    CHECK_FALSE(analyze(curved).inv_L_affine);

    CHECK_THROWS_AS(FamilySpec({}), InvalidInput);
    CHECK_THROWS_AS(FamilySpec({cand({1}, 1, -1, 1, 0)}), InvalidInput);
}

TEST_CASE("irrational walls")
{
    // h = (1+t)(1+t) - (2-t) = t^2 + 3t - 1, root (-3 + sqrt 13)/2.
    auto spec = FamilySpec({cand({1}, 1, 1, 1, 0), cand({2}, 2, -1, 1, 1)});
    auto w = walls(spec);
    REQUIRE(w.size() == 1);
    CHECK(w[0] == Surd(Rat(-3, 2), Rat(1, 2), Int(13)));
    auto rep = analyze(spec);
    REQUIRE(rep.chambers.size() == 2);
    CHECK(rep.chambers[0].maximizers == std::vector<std::size_t>{1});
    CHECK(rep.chambers[1].maximizers == std::vector<std::size_t>{0});
    CHECK(rep.wall_maximizers[0].maximizers == std::vector<std::size_t>{0, 1});
    CHECK(rep.wall_maximizers[0].continuous);
}

TEST_CASE("random families: chambers, continuity, affineness")
{
    Rng rng(41);
    for (int trial = 0; trial < 200; ++trial) {
        auto spec = random_family(rng);
        auto rep = analyze(spec);
        CHECK(rep.chambers.size() == rep.walls.size() + 1);
        for (const auto& w : rep.wall_maximizers)
            CHECK(w.continuous);
        for (const auto& ch : rep.chambers) {
            const auto& f = spec.candidates()[ch.formula];
            for (const auto& t : interior_points(ch.lo, ch.hi, 5)) {
                CHECK(maximizers_at(spec, Surd(t)) == ch.maximizers);
                CHECK(L_at(spec, t) == f.alpha(t) / f.beta(t));
            }
        }
        if (rep.inv_L_affine) {
            // One candidate attains the max at every sampled t.
            const auto j = rep.chambers.front().formula;
            for (int k = 0; k <= 10; ++k) {
                Rat t(k, 10);
                const auto& c = spec.candidates()[j];
                CHECK(L_at(spec, t) == c.alpha(t) / c.beta(t));
            }
        }
        // Homogeneity: doubling every beta halves L.
        std::vector<FamilyCandidate> doubled = spec.candidates();
        for (auto& c : doubled) {
            c.b0 *= 2;
            c.b1 *= 2;
        }
        FamilySpec d(doubled);
        for (int k = 0; k <= 4; ++k)
            CHECK(L_at(d, Rat(k, 4)) * 2 == L_at(spec, Rat(k, 4)));
    }
}

TEST_CASE("stability from a strict gap")
{
    auto spec = ex_change();
    auto s = stability_neighborhood(spec, Rat(0));
    CHECK(s.maximizer == 0);
    CHECK(s.gap == Rat(12, 7) - Rat(5, 3));
    CHECK(s.lo == Surd(Rat(0)));
    CHECK(s.hi == Surd(Rat(1, 3)));
    CHECK_THROWS_AS(stability_neighborhood(spec, Rat(1, 3)), InvalidInput);

    Rng rng(42);
    for (int trial = 0; trial < 200; ++trial) {
        auto fam = random_family(rng);
        Rat t0(testing::uniform(rng, 0, 12), 12);
        if (maximizers_at(fam, Surd(t0)).size() != 1)
            continue;
        auto st = stability_neighborhood(fam, t0);
        CHECK(st.gap.sign() > 0);
        Surd lo = st.lo < Surd(Rat(0)) ? Surd(Rat(0)) : st.lo;
        Surd hi = Surd(Rat(1)) < st.hi ? Surd(Rat(1)) : st.hi;
        for (const auto& t : interior_points(lo, hi, 5))
            CHECK(maximizers_at(fam, Surd(t)) == std::vector<std::size_t>{st.maximizer});
    }
}

TEST_CASE("families from monomial data")
{
    auto a = MonomialIdeal(2, {ExpVec{4, 0}, ExpVec{2, 3}, ExpVec{0, 5}});
    auto spec = family_from_monomial(a, PrincipalExponent{{Rat(1), Rat(2)}, {Rat(1), Rat(0)}});
    REQUIRE(spec.size() == 1);
    const auto& c = spec.candidates()[0];
    CHECK(std::get<std::vector<std::int64_t>>(c.label) == std::vector<std::int64_t>{5, 4});
    CHECK(c.a0 == 20);
    CHECK(c.b0 == 13);
    CHECK(c.b1 == 5);
    CHECK(walls(spec).empty());

    // Two compact facets (1,1)/5 and (2,1)/7.
    auto b = MonomialIdeal(2, {ExpVec{5, 0}, ExpVec{2, 3}, ExpVec{0, 7}});
    auto two = family_from_monomial(b, PrincipalExponent{{Rat(1), Rat(2)}, {Rat(1), Rat(0)}});
    REQUIRE(two.size() == 2);
    // (1,1): 5 / (3 + t); (2,1): 7 / (4 + 2t); equal where 5(4+2t) = 7(3+t), t = 1/3.
    CHECK(walls(two) == std::vector<Surd>{Surd(Rat(1, 3))});

    // t-independent b: no walls.
    auto flat = family_from_monomial(b, PrincipalExponent{{Rat(1), Rat(1)}, {Rat(0), Rat(0)}});
    CHECK(walls(flat).empty());

    auto m = MonomialIdeal::maximal(2);
    auto prod = family_from_monomial(b, std::vector<ProductTerm>{{m, Rat(1), Rat(1)}});
    for (const auto& cc : prod.candidates()) {
        CHECK(cc.b0 == 1);
        CHECK(cc.b1 == 1);
    }
    CHECK_THROWS_AS(family_from_monomial(b, PrincipalExponent{{Rat(0), Rat(0)}, {Rat(0), Rat(0)}}), InvalidInput);
}
