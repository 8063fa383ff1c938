#include "lojex/io.hpp"

#include "lojex/error.hpp"

#include <fstream>

namespace lojex::io {

namespace {

template <class F>
auto guard(const char* what, F&& f) -> decltype(f())
{
    try {
        return f();
    } catch (const Json::exception& e) {
        throw InvalidInput(std::string("malformed ") + what + ": " + e.what());
    }
}

const Json& need(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        throw InvalidInput(std::string("missing field '") + key + "'");
    return j.at(key);
}

const Json& need_array(const Json& j, const char* key)
{
    const Json& a = need(j, key);
    if (!a.is_array())
        throw InvalidInput(std::string("field '") + key + "' must be an array");
    return a;
}

std::int64_t int_from(const Json& j)
{
    if (j.is_number_integer())
        return j.get<std::int64_t>();
    if (j.is_string())
        return Rat::parse(j.get<std::string>()).to_int64();
    throw InvalidInput("expected an integer");
}

template <class T, class F>
Json array_of(const std::vector<T>& v, F&& f)
{
    Json a = Json::array();
    for (const auto& x : v)
        a.push_back(f(x));
    return a;
}

Json indices(const std::vector<std::size_t>& v)
{
    return array_of(v, [](std::size_t i) { return Json(i); });
}

Json label_json(const CandidateLabel& l)
{
    if (const auto* s = std::get_if<std::string>(&l))
        return *s;
    return Json(std::get<std::vector<std::int64_t>>(l));
}

Json weights(const std::vector<WeightVec>& v)
{
    return array_of(v, [](const WeightVec& w) { return to_json(w); });
}

} // namespace

Json read_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw InvalidInput("cannot open " + path.string());
    return guard("JSON file", [&] { return Json::parse(in); });
}

Rat rat_from(const Json& j)
{
    if (j.is_number_integer())
        return Rat(j.get<std::int64_t>());
    if (j.is_string())
        return Rat::parse(j.get<std::string>());
    throw InvalidInput("expected a rational as \"a/b\" or an integer");
}

Json to_json(const Rat& r) { return r.str(); }

ExtRat ext_rat_from(const Json& j)
{
    if (j.is_string() && j.get<std::string>() == "inf")
        return {true, Rat(0)};
    return {false, rat_from(j)};
}

Json to_json(const ExtRat& r) { return r.str(); }

Json to_json(const RatVec& v)
{
    return array_of(v, [](const Rat& r) { return to_json(r); });
}

RatVec rat_vec_from(const Json& j)
{
    if (!j.is_array())
        throw InvalidInput("expected an array of rationals");
    RatVec out;
    for (const auto& x : j)
        out.push_back(rat_from(x));
    return out;
}

Json to_json(const ExpVec& e) { return Json(e.coords()); }

ExpVec exp_vec_from(const Json& j)
{
    if (!j.is_array())
        throw InvalidInput("expected an exponent array");
    std::vector<std::int64_t> c;
    for (const auto& x : j)
        c.push_back(int_from(x));
    return ExpVec(std::move(c));
}

Json to_json(const WeightVec& w) { return Json(w.coords()); }

WeightVec weight_from(const Json& j) { return WeightVec(exp_vec_from(j).coords()); }

MonomialIdeal ideal_from(const Json& j)
{
    return guard("ideal", [&] {
        auto dim = int_from(need(j, "dim"));
        if (dim <= 0)
            throw InvalidInput("ideal dimension must be positive");
        std::vector<ExpVec> gens;
        for (const auto& g : need_array(j, "gens"))
            gens.push_back(exp_vec_from(g));
        return MonomialIdeal(static_cast<std::size_t>(dim), std::move(gens));
    });
}

Json to_json(const MonomialIdeal& ideal)
{
    return {{"dim", ideal.dim()}, {"gens", array_of(ideal.gens(), [](const ExpVec& e) { return to_json(e); })}};
}

bool is_filtration(const Json& j) { return j.is_object() && j.contains("kind"); }

FiltrationSpec filtration_from(const Json& j)
{
    return guard("filtration", [&] {
        if (!is_filtration(j))
            return FiltrationSpec::power(ideal_from(j));
        const auto kind = need(j, "kind").get<std::string>();
        if (kind == "power")
            return FiltrationSpec::power(ideal_from(need(j, "ideal")));
        if (kind == "linear") {
            LinearFiltration lf;
            auto dim = int_from(need(j, "dim"));
            if (dim <= 0)
                throw InvalidInput("filtration dimension must be positive");
            lf.dim = static_cast<std::size_t>(dim);
            for (const auto& c : need_array(j, "constraints"))
                lf.constraints.push_back({weight_from(need(c, "w")), rat_from(need(c, "c"))});
            return FiltrationSpec(std::move(lf));
        }
        if (kind == "product") {
            ProductFiltration pf;
            for (const auto& f : need_array(j, "factors"))
                pf.factors.push_back({ideal_from(need(f, "ideal")), rat_from(need(f, "lambda"))});
            return FiltrationSpec(std::move(pf));
        }
        throw InvalidInput("unknown filtration kind '" + kind + "'");
    });
}

Json to_json(const FiltrationSpec& f)
{
    return std::visit(
        [](const auto& k) -> Json {
            using K = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<K, PowerFiltration>) {
                return {{"kind", "power"}, {"ideal", to_json(k.ideal)}};
            } else if constexpr (std::is_same_v<K, LinearFiltration>) {
                Json cs = Json::array();
                for (const auto& c : k.constraints)
                    cs.push_back({{"w", to_json(c.w)}, {"c", to_json(c.c)}});
                return {{"kind", "linear"}, {"dim", k.dim}, {"constraints", cs}};
            } else {
                Json fs = Json::array();
                for (const auto& f : k.factors)
                    fs.push_back({{"ideal", to_json(f.ideal)}, {"lambda", to_json(f.lambda)}});
                return {{"kind", "product"}, {"factors", fs}};
            }
        },
        f.kind());
}

FamilySpec family_from(const Json& j)
{
    return guard("family", [&] {
        std::vector<FamilyCandidate> cs;
        for (const auto& c : need_array(j, "candidates")) {
            const Json& l = need(c, "label");
            CandidateLabel label;
            if (l.is_string())
                label = l.get<std::string>();
            else
                label = exp_vec_from(l).coords();
            cs.push_back({label, rat_from(need(c, "a0")), rat_from(need(c, "a1")), rat_from(need(c, "b0")),
                          rat_from(need(c, "b1"))});
        }
        return FamilySpec(std::move(cs));
    });
}

Json to_json(const FamilySpec& f)
{
    Json cs = Json::array();
    for (const auto& c : f.candidates())
        cs.push_back({{"label", label_json(c.label)},
                      {"a0", to_json(c.a0)},
                      {"a1", to_json(c.a1)},
                      {"b0", to_json(c.b0)},
                      {"b1", to_json(c.b1)}});
    return {{"candidates", cs}};
}

BFamily bfamily_from(const Json& j)
{
    return guard("b-family", [&]() -> BFamily {
        const auto kind = need(j, "kind").get<std::string>();
        if (kind == "principal")
            return PrincipalExponent{rat_vec_from(need(j, "e0")), rat_vec_from(need(j, "e1"))};
        if (kind == "product") {
            std::vector<ProductTerm> terms;
            for (const auto& t : need_array(j, "terms"))
                terms.push_back({ideal_from(need(t, "ideal")), rat_from(need(t, "l0")), rat_from(need(t, "l1"))});
            return terms;
        }
        throw InvalidInput("unknown b-family kind '" + kind + "'");
    });
}

PolyMap polymap_from(const Json& j)
{
    return guard("polynomial map", [&] {
        auto n = int_from(need(j, "n"));
        if (n <= 0)
            throw InvalidInput("number of variables must be positive");
        std::vector<Polynomial> comps;
        for (const auto& f : need_array(j, "components")) {
            if (!f.is_array())
                throw InvalidInput("component must be an array of terms");
            Polynomial p;
            for (const auto& t : f)
                p[exp_vec_from(need(t, "exp"))] += rat_from(need(t, "coeff"));
            comps.push_back(std::move(p));
        }
        return PolyMap(static_cast<std::size_t>(n), std::move(comps));
    });
}

Json to_json(const PolyMap& F)
{
    Json comps = Json::array();
    for (const auto& f : F.components()) {
        Json terms = Json::array();
        for (const auto& [e, c] : f)
            terms.push_back({{"exp", to_json(e)}, {"coeff", to_json(c)}});
        comps.push_back(terms);
    }
    return {{"n", F.n()}, {"components", comps}};
}

DivisorTable table_from(const Json& j)
{
    return guard("divisor table", [&] {
        std::vector<DivisorRow> rows;
        for (const auto& r : need_array(j, "rows"))
            rows.push_back({need(r, "label").get<std::string>(), int_from(need(r, "ordX")), int_from(need(r, "ordY"))});
        return DivisorTable(std::move(rows));
    });
}

Json to_json(const DivisorTable& t)
{
    Json rows = Json::array();
    for (const auto& r : t.rows())
        rows.push_back({{"label", r.label}, {"ordX", r.ord_x}, {"ordY", r.ord_y}});
    return {{"rows", rows}};
}

Surd surd_from(const Json& j)
{
    return guard("surd", [&] {
        if (!j.is_object())
            return Surd(rat_from(j));
        return Surd(rat_from(need(j, "a")), rat_from(need(j, "b")), Int(need(j, "d").get<std::string>()));
    });
}

Json to_json(const Surd& s)
{
    return {{"a", to_json(s.a())}, {"b", to_json(s.b())}, {"d", s.d().get_str()}, {"str", s.str()}};
}

Json to_json(const NewtonPolyhedron& p)
{
    Json facets = Json::array();
    for (const auto& f : p.facets())
        facets.push_back({{"normal", to_json(f.normal)},
                          {"offset", to_json(f.offset)},
                          {"compact", f.compact()},
                          {"vertices", indices(f.vertex_ids)}});
    return {{"dim", p.dim()},
            {"vertices", array_of(p.vertices(), [](const RatVec& v) { return to_json(v); })},
            {"facets", facets}};
}

namespace {

Json power_cert(const PowerCertificate& c)
{
    Json parts = Json::array();
    for (const auto& [g, mult] : c.parts)
        parts.push_back({{"generator", to_json(g)}, {"multiplicity", mult}});
    return {{"monomial", to_json(c.monomial)}, {"k", c.k}, {"parts", parts}};
}

} // namespace

Json to_json(const ClosureCertificate& c)
{
    Json w = std::visit(
        [](const auto& x) -> Json {
            using X = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<X, ViolatedFacet>) {
                return {{"type", "violated_facet"},
                        {"normal", to_json(x.normal)},
                        {"offset", to_json(x.offset)},
                        {"monomial", to_json(x.monomial)},
                        {"deficit", to_json(x.deficit)}};
            } else if constexpr (std::is_same_v<X, ConvexCertificate>) {
                Json items = Json::array();
                for (const auto& it : x.items)
                    items.push_back(
                        {{"point", to_json(it.point)}, {"weights", to_json(it.weights)}, {"slack", to_json(it.slack)}});
                return {{"type", "convex_combination"},
                        {"generators", array_of(x.generators, [](const RatVec& v) { return to_json(v); })},
                        {"items", items}};
            } else {
                Json j = power_cert(x);
                j["type"] = "power";
                return j;
            }
        },
        c.witness);
    return {{"member", c.member}, {"witness", w}};
}

Json to_json(const PowerMembership& m)
{
    Json j{{"member", m.member}};
    j["k"] = m.k ? Json(*m.k) : Json(nullptr);
    j["certificate"] = m.certificate ? power_cert(*m.certificate) : Json(nullptr);
    return j;
}

Json to_json(const LojResult& r)
{
    Json cands = Json::array();
    for (const auto& c : r.per_candidate)
        cands.push_back(
            {{"u", to_json(c.u)}, {"va", to_json(c.va)}, {"vb", to_json(c.vb)}, {"ratio", to_json(c.ratio)}});
    return {{"value", r.infinite ? Json("inf") : to_json(r.value)},
            {"maximizers", weights(r.maximizers)},
            {"per_candidate", cands},
            {"lower_bound_only", r.lower_bound_only}};
}

Json to_json(const LctResult& r)
{
    return {{"value", to_json(r.value)}, {"minimizers", weights(r.minimizers)}};
}

Json to_json(const ThetaReport& r)
{
    Json j{{"lct", to_json(r.lct)}, {"loj_m", to_json(r.loj_m)}, {"theta", to_json(r.theta)}, {"rigid", r.rigid}};
    if (r.diagonal_facet)
        j["diagonal_facet"] = {{"normal", to_json(r.diagonal_facet->first)},
                               {"offset", to_json(r.diagonal_facet->second)}};
    else
        j["diagonal_facet"] = nullptr;
    return j;
}

Json to_json(const SharpnessWitness& w)
{
    Json checks = Json::array();
    for (const auto& c : w.checks)
        checks.push_back({{"v", to_json(c.v)}, {"v_mq", to_json(c.v_mq)}, {"v_jnp", to_json(c.v_jnp)}});
    return {{"N", w.N},
            {"M", w.M},
            {"p", w.p},
            {"q", w.q},
            {"J_N", Json::array({Json::array({w.N, 0}), Json::array({0, w.N * w.N})})},
            {"witness", to_json(w.witness)},
            {"checks", checks},
            {"condition1", w.condition1},
            {"witness_value", to_json(w.witness_value)},
            {"witness_outside", w.witness_outside}};
}

Json to_json(const MixedTable& t)
{
    return {{"dim", t.dim},
            {"I", to_json(t.I)},
            {"J", to_json(t.J)},
            {"e", t.e},
            {"window", {{"n0", t.n0}, {"span", t.span}}},
            {"stable", t.stable}};
}

Json to_json(const TeissierReport& r)
{
    Json lc = Json::array();
    for (const auto& c : r.log_convexity)
        lc.push_back({{"i", c.i}, {"square", c.square}, {"product", c.product}, {"holds", c.holds}});
    Json cb = Json::array();
    for (const auto& c : r.containment)
        cb.push_back({{"p", c.p},
                      {"q", c.q},
                      {"i", c.i},
                      {"lhs", c.lhs.get_str()},
                      {"rhs", c.rhs.get_str()},
                      {"holds", c.holds}});
    Json lb = Json::array();
    for (const auto& b : r.loj_bounds)
        lb.push_back({{"i", b.i},
                      {"loj", to_json(b.loj)},
                      {"lhs", to_json(b.lhs)},
                      {"rhs", to_json(b.rhs)},
                      {"holds", b.holds}});
    return {{"table", to_json(r.table)},
            {"table_I_m", to_json(r.table_I_m)},
            {"table_J_m", to_json(r.table_J_m)},
            {"log_convexity", lc},
            {"minkowski",
             {{"e_product", r.minkowski.e_product},
              {"e_I", r.minkowski.e_I},
              {"e_J", r.minkowski.e_J},
              {"holds", r.minkowski.holds}}},
            {"containment", cb},
            {"loj_bounds", lb},
            {"all_hold", r.all_hold}};
}

Json to_json(const MilnorReport& r)
{
    Json bs = Json::array();
    for (const auto& b : r.bounds)
        bs.push_back({{"i", b.i}, {"lhs", to_json(b.lhs)}, {"rhs", b.rhs.get_str()}, {"holds", b.holds}});
    return {{"exponents", r.exponents}, {"mu", r.mu}, {"loj", to_json(r.loj)}, {"bounds", bs}, {"all_hold", r.all_hold}};
}

Json to_json(const ChamberReport& r)
{
    Json chambers = Json::array();
    for (const auto& c : r.chambers)
        chambers.push_back({{"lo", to_json(c.lo)},
                            {"hi", to_json(c.hi)},
                            {"sample", to_json(c.sample)},
                            {"maximizers", indices(c.maximizers)},
                            {"formula", c.formula},
                            {"inv_affine", c.inv_affine}});
    Json walls = Json::array();
    for (const auto& w : r.wall_maximizers)
        walls.push_back({{"t", to_json(w.t)}, {"maximizers", indices(w.maximizers)}, {"continuous", w.continuous}});
    return {{"walls", array_of(r.walls, [](const Surd& s) { return to_json(s); })},
            {"chambers", chambers},
            {"wall_maximizers", walls},
            {"L0", to_json(r.L0)},
            {"L1", to_json(r.L1)},
            {"maximizers0", indices(r.maximizers0)},
            {"maximizers1", indices(r.maximizers1)},
            {"inv_L_affine", r.inv_L_affine}};
}

Json to_json(const StabilityReport& r)
{
    return {{"maximizer", r.maximizer}, {"gap", to_json(r.gap)}, {"lo", to_json(r.lo)}, {"hi", to_json(r.hi)}};
}

Json to_json(const NondegeneracyReport& r)
{
    Json checks = Json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"w", to_json(c.w)},
                          {"faces", array_of(c.faces, [](const UniPoly& p) { return to_json(p.coeffs()); })},
                          {"gcd", to_json(c.gcd.coeffs())},
                          {"monomial_face", c.monomial_face},
                          {"degenerate", c.degenerate}});
    return {{"nondegenerate", r.nondegenerate},
            {"offending_w", r.offending ? to_json(*r.offending) : Json(nullptr)},
            {"checks", checks}};
}

Json to_json(const InfinityMin& m)
{
    return {{"value", to_json(m.value)}, {"argmin", m.argmin}};
}

} // namespace lojex::io
