#include "generators.hpp"

#include "lojex/error.hpp"
#include "lojex/io.hpp"

#include <doctest.h>

using namespace lojex;
using lojex::io::Json;
using lojex::testing::Rng;

namespace {

// Serialize, print, parse back.
Json reparse(const Json& j) { return Json::parse(j.dump()); }

} // namespace

TEST_CASE("rationals and vectors")
{
    CHECK(io::rat_from(Json("3/4")) == Rat(3, 4));
    CHECK(io::rat_from(Json(-5)) == Rat(-5));
    CHECK(io::rat_from(Json("6/8")) == Rat(3, 4));
    CHECK(io::to_json(Rat(-6, 8)) == Json("-3/4"));
    CHECK(io::ext_rat_from(Json("inf")).infinite);
    CHECK_THROWS_AS(io::rat_from(Json(1.5)), InvalidInput);
    CHECK_THROWS_AS(io::rat_from(Json("1/0")), InvalidInput);
    CHECK(io::weight_from(Json::parse("[2, 1]")) == WeightVec{2, 1});
    CHECK_THROWS_AS(io::weight_from(Json::parse("[2, 2]")), InvalidInput);
}

TEST_CASE("input formats round-trip")
{
    auto ideal = io::ideal_from(Json::parse(R"({"dim": 2, "gens": [[4, 0], [2, 3], [0, 5], [3, 3]]})"));
    CHECK(ideal.gens().size() == 3);
    CHECK(io::ideal_from(reparse(io::to_json(ideal))) == ideal);
    CHECK_THROWS_AS(io::ideal_from(Json::parse(R"({"dim": 2})")), InvalidInput);
    CHECK_THROWS_AS(io::ideal_from(Json::parse(R"({"dim": 2, "gens": [[1, 0, 0]]})")), InvalidInput);
    CHECK_THROWS_AS(io::ideal_from(Json::parse(R"({"dim": "x", "gens": []})")), InvalidInput);

    for (const char* text : {
             R"({"kind": "power", "ideal": {"dim": 2, "gens": [[1, 0], [0, 1]]}})",
             R"({"kind": "linear", "dim": 2, "constraints": [{"w": [1, 2], "c": "3/2"}, {"w": [1, 0], "c": "1"}]})",
             R"({"kind": "product", "factors": [{"ideal": {"dim": 2, "gens": [[2, 0], [0, 1]]}, "lambda": "1/2"}]})",
         }) {
        auto f = io::filtration_from(Json::parse(text));
        auto j = io::to_json(f);
        CHECK(io::to_json(io::filtration_from(reparse(j))) == j);
    }
    // A bare ideal is the power filtration.
    CHECK(io::filtration_from(io::to_json(ideal)).is_power());
    CHECK_THROWS_AS(io::filtration_from(Json::parse(R"({"kind": "other"})")), InvalidInput);

    auto fam = io::family_from(Json::parse(
        R"({"candidates": [{"label": [3, 2], "a0": "12", "a1": "0", "b0": "7", "b1": "3"},
                           {"label": "E", "a0": 5, "a1": 0, "b0": 3, "b1": 1}]})"));
    CHECK(fam.size() == 2);
    CHECK(io::to_json(io::family_from(reparse(io::to_json(fam)))) == io::to_json(fam));

    auto F = io::polymap_from(Json::parse(
        R"({"n": 2, "components": [[{"exp": [1, 0], "coeff": "1"}, {"exp": [0, 1], "coeff": "-1/2"}],
                                   [{"exp": [2, 2], "coeff": 3}]]})"));
    CHECK(io::to_json(io::polymap_from(reparse(io::to_json(F)))) == io::to_json(F));

    auto T = io::table_from(Json::parse(R"({"rows": [{"label": "E1", "ordX": 2, "ordY": 3}]})"));
    CHECK(io::table_from(reparse(io::to_json(T))).rows() == T.rows());

    auto b = io::bfamily_from(Json::parse(R"({"kind": "principal", "e0": [1, 2], "e1": ["1", 0]})"));
    CHECK(std::get<PrincipalExponent>(b).e1 == RatVec{Rat(1), Rat(0)});
}

TEST_CASE("result formats round-trip")
{
    Surd s(Rat(-3, 2), Rat(1, 2), Int(13));
    CHECK(io::surd_from(reparse(io::to_json(s))) == s);
    CHECK(io::surd_from(Json("1/3")) == Surd(Rat(1, 3)));

    Rng rng(61);
    for (int trial = 0; trial < 30; ++trial) {
        auto a = testing::random_ideal(rng, 2, true, 6);
        if (!a.is_proper())
            continue;
        auto m = MonomialIdeal::maximal(2);
        for (const Json& j : {io::to_json(newton_polyhedron(a)), io::to_json(loj_ideal(a, m)),
                              io::to_json(contains_closure(m, 3, a, 1)), io::to_json(theta(a)),
                              io::to_json(check_teissier(a, m, {1}))}) {
            CHECK(reparse(j) == j);
        }
        // Every rational inside a result re-parses to the same value.
        auto r = loj_ideal(a, m);
        auto j = reparse(io::to_json(r));
        CHECK(io::rat_from(j["value"]) == r.value);
        for (std::size_t i = 0; i < r.per_candidate.size(); ++i)
            CHECK(io::rat_from(j["per_candidate"][i]["ratio"]) == r.per_candidate[i].ratio);
    }
}
