// Command-line front end. Every subcommand runs one library operation and
// prints its result: a short plain-text form by default, the full result with
// certificates under --json. --verify also runs the matching reference
// computation and fails with exit code 1 on disagreement.

#include "lojex/error.hpp"
#include "lojex/io.hpp"
#include "lojex/oracle.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <random>
#include <sstream>

using namespace lojex;
using io::Json;

namespace {

struct Options {
    bool json = false;
    bool verify = false;
};

std::string vec_str(const std::vector<std::int64_t>& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

std::vector<std::int64_t> parse_ints(const std::string& text)
{
    std::vector<std::int64_t> out;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(part, &used));
            if (used != part.size())
                throw std::invalid_argument(part);
        } catch (const std::logic_error&) {
            throw InvalidInput("bad integer list '" + text + "'");
        }
    }
    if (out.empty())
        throw InvalidInput("empty integer list");
    return out;
}

// "1,2;3,1" -> weights.
std::vector<WeightVec> parse_weights(const std::string& text)
{
    std::vector<WeightVec> out;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ';'))
        out.emplace_back(parse_ints(part));
    if (out.empty())
        throw InvalidInput("empty weight list");
    return out;
}

// Result of one subcommand: plain text, the JSON document and the optional
// verification outcome.
struct Output {
    std::string plain;
    Json json;
    std::optional<bool> agree;
    std::string detail;
};

int emit(const Options& opt, Output out)
{
    if (opt.json) {
        if (out.agree)
            out.json["verify"] = {{"agree", *out.agree}, {"detail", out.detail}};
        std::cout << out.json.dump(2) << '\n';
    } else {
        std::cout << out.plain;
        if (!out.plain.empty() && out.plain.back() != '\n')
            std::cout << '\n';
        if (out.agree)
            std::cout << (*out.agree ? "verify: agree" : "verify: DISAGREE") << (out.detail.empty() ? "" : " (" + out.detail + ")")
                      << '\n';
    }
    return out.agree && !*out.agree ? 1 : 0;
}

std::int64_t max_coord(const MonomialIdeal& I)
{
    std::int64_t m = 1;
    for (const auto& g : I.gens())
        for (auto x : g)
            m = std::max(m, x);
    return m;
}

// Lattice points of [0, hi]^dim.
template <class F>
void for_box(std::size_t dim, std::int64_t hi, F&& f)
{
    std::vector<std::int64_t> c(dim, 0);
    for (;;) {
        f(ExpVec(c));
        std::size_t i = 0;
        while (i < dim && c[i] == hi)
            c[i++] = 0;
        if (i == dim)
            return;
        ++c[i];
    }
}

std::vector<WeightVec> weight_grid(std::size_t dim, std::int64_t hi)
{
    std::vector<WeightVec> out;
    std::vector<std::int64_t> c(dim, 1);
    for (;;) {
        std::int64_t g = 0;
        for (auto x : c)
            g = std::gcd(g, x);
        if (g == 1)
            out.emplace_back(c);
        std::size_t i = 0;
        while (i < dim && c[i] == hi)
            c[i++] = 1;
        if (i == dim)
            return out;
        ++c[i];
    }
}

std::vector<RatVec> points_of(const MonomialIdeal& I)
{
    std::vector<RatVec> pts;
    for (const auto& g : I.gens())
        pts.push_back(g.to_rat());
    return pts;
}

Output cmd_facets(const Options& opt, const std::string& path)
{
    auto I = io::ideal_from(io::read_file(path));
    auto P = newton_polyhedron(I);
    Output out;
    for (const auto& f : P.facets())
        out.plain += vec_str(f.normal.coords()) + " " + f.offset.str() + (f.compact() ? " compact" : "") + "\n";
    out.json = io::to_json(P);
    if (opt.verify) {
        int bad = 0;
        for_box(I.dim(), max_coord(I) + 1, [&](const ExpVec& m) {
            auto x = m.to_rat();
            bad += member(P, m) != oracle::vrep_member(P, x);
        });
        out.agree = bad == 0;
        out.detail = "facet and vertex membership on the box";
    }
    return out;
}

Output cmd_closure(const Options& opt, const std::string& path)
{
    auto I = io::ideal_from(io::read_file(path));
    auto C = closure_generators(I);
    Output out;
    for (const auto& g : C.gens())
        out.plain += vec_str(g.coords()) + "\n";
    out.json = io::to_json(C);
    if (opt.verify) {
        auto pts = points_of(I);
        int bad = 0;
        for_box(I.dim(), max_coord(I), [&](const ExpVec& m) {
            auto x = m.to_rat();
            bad += C.contains(m) != oracle::hull_member(pts, x);
        });
        out.agree = bad == 0;
        out.detail = "generators against hull membership on the box";
    }
    return out;
}

Output cmd_member(const Options& opt, const std::string& path, const std::string& mono)
{
    auto I = io::ideal_from(io::read_file(path));
    ExpVec m(parse_ints(mono));
    auto r = power_oracle_member(I, m);
    Output out;
    out.plain = r.member ? "true" : "false";
    if (r.k)
        out.plain += "\nk " + std::to_string(*r.k);
    out.json = io::to_json(r);
    if (opt.verify) {
        out.agree = r.member == member(newton_polyhedron(I), m);
        out.detail = "power test against the facet description";
    }
    return out;
}

Output cmd_contain(const Options& opt, const std::string& bpath, unsigned q, const std::string& apath, unsigned p)
{
    auto b = io::ideal_from(io::read_file(bpath));
    auto a = io::ideal_from(io::read_file(apath));
    auto c = contains_closure(b, q, a, p);
    Output out;
    out.plain = c.member ? "true" : "false";
    if (const auto* v = std::get_if<ViolatedFacet>(&c.witness))
        out.plain += "\nwitness " + vec_str(v->monomial.coords()) + " violates " + vec_str(v->normal.coords()) + " >= " +
                     v->offset.str();
    out.json = io::to_json(c);
    if (opt.verify) {
        std::vector<RatVec> target;
        for (const auto& g : a.gens()) {
            RatVec x = g.to_rat();
            for (auto& xi : x)
                xi *= Rat(p);
            target.push_back(std::move(x));
        }
        auto min_q = oracle::min_containment_power(b, a, p, q);
        out.agree = c.recheck(target) && c.member == min_q.has_value();
        out.detail = "certificate recheck and LP containment scan";
    }
    return out;
}

Output cmd_loj(const Options& opt, const std::string& apath, const std::string& bpath, int& code)
{
    auto aj = io::read_file(apath), bj = io::read_file(bpath);
    const bool ideals = !io::is_filtration(aj) && !io::is_filtration(bj);
    LojResult r;
    if (ideals)
        r = loj_ideal(io::ideal_from(aj), io::ideal_from(bj));
    else
        r = loj_filtration(io::filtration_from(aj), io::filtration_from(bj));
    Output out;
    out.plain = r.infinite ? "inf" : r.value.str();
    for (const auto& u : r.maximizers)
        out.plain += "\nmaximizer " + vec_str(u.coords());
    out.json = io::to_json(r);
    if (r.lower_bound_only) {
        std::cerr << "lojex: dimension >= 3 filtration pair: the value is a certified lower bound only\n";
        code = 3;
    }
    if (opt.verify && !r.infinite) {
        bool ok = true;
        if (ideals) {
            auto a = io::ideal_from(aj), b = io::ideal_from(bj);
            for (unsigned p = 1; p <= 3; ++p) {
                auto q = oracle::min_containment_power(b, a, p, kMaxContainmentPower);
                auto want = (r.value * Rat(p)).ceil();
                ok &= q.has_value() ? Int(*q) == want : want > kMaxContainmentPower;
            }
            out.detail = "minimal containment powers for p = 1..3";
        } else {
            auto a = io::filtration_from(aj), b = io::filtration_from(bj);
            for (const auto& u : weight_grid(a.dim(), a.dim() <= 2 ? 12 : 5)) {
                Rat vb = v_filtration(u, b);
                if (vb.sign() > 0)
                    ok &= v_filtration(u, a) / vb <= r.value;
            }
            for (const auto& u : r.maximizers)
                ok &= v_filtration(u, a) / v_filtration(u, b) == r.value;
            out.detail = "valuative bound over a weight grid";
        }
        out.agree = ok;
    }
    return out;
}

Output cmd_lct(const Options& opt, const std::string& path)
{
    auto spec = io::filtration_from(io::read_file(path));
    auto region = asymptotic_region(spec);
    auto r = lct(region);
    Output out;
    out.plain = r.value.str();
    out.json = io::to_json(r);
    if (opt.verify) {
        out.agree = r.value * oracle::diagonal_threshold(region.vertices()) == 1;
        out.detail = "reciprocal of the diagonal threshold";
    }
    return out;
}

Output cmd_theta(const Options& opt, const std::string& path)
{
    auto I = io::ideal_from(io::read_file(path));
    auto r = theta(I);
    Output out;
    out.plain = r.theta.str() + "\nrigid " + (r.rigid ? "true" : "false");
    out.json = io::to_json(r);
    if (opt.verify) {
        auto q = oracle::min_containment_power(MonomialIdeal::maximal(I.dim()), I, 1, kMaxContainmentPower);
        bool ok = q && Int(*q) == r.loj_m.ceil();
        ok &= r.lct * oracle::diagonal_threshold(points_of(I)) == 1;
        out.agree = ok;
        out.detail = "containment scan for Loj_m, diagonal threshold for lct";
    }
    return out;
}

Output cmd_mixed(const Options& opt, const std::string& ipath, const std::string& jpath, std::int64_t n0)
{
    auto I = io::ideal_from(io::read_file(ipath));
    auto J = io::ideal_from(io::read_file(jpath));
    auto t = mixed_multiplicities(I, J, n0);
    Output out;
    for (std::size_t i = 0; i < t.e.size(); ++i)
        out.plain += (i ? " " : "") + std::to_string(t.e[i]);
    out.json = io::to_json(t);
    if (opt.verify) {
        Rat fact = 1;
        for (std::size_t k = 2; k <= t.dim; ++k)
            fact *= Rat(static_cast<long>(k));
        bool ok = Rat(t.e.back()) == fact * covolume(newton_polyhedron(I));
        ok &= Rat(t.e.front()) == fact * covolume(newton_polyhedron(J));
        ok &= Rat(product_multiplicity(t)) == fact * covolume(newton_polyhedron(product(I, J)));
        ok &= colength(I, 1, J, 1) == oracle::brute_colength(product(I, J));
        out.agree = ok;
        out.detail = "d! covolumes of NP(I), NP(J), NP(IJ) and a brute colength";
    }
    return out;
}

Output cmd_milnor(const Options& opt, const std::string& exps)
{
    auto a = parse_ints(exps);
    auto r = milnor_and_gradient(a);
    Output out;
    out.plain = "mu " + std::to_string(r.mu) + "\nloj " + r.loj.str();
    for (const auto& b : r.bounds)
        out.plain += "\nbound i=" + std::to_string(b.i) + " " + b.lhs.str() + " >= " + b.rhs.get_str() +
                     (b.holds ? "" : " FAILS");
    out.json = io::to_json(r);
    if (opt.verify) {
        std::vector<std::int64_t> j;
        for (auto x : a)
            j.push_back(x - 1);
        auto J = MonomialIdeal::diagonal(j);
        auto q = oracle::min_containment_power(MonomialIdeal::maximal(a.size()), J, 1, kMaxContainmentPower);
        out.agree = oracle::brute_colength(J) == r.mu && q && Int(*q) == r.loj.ceil();
        out.detail = "brute colength of J(f) and containment scan";
    }
    return out;
}

// Rational t in [0, 1] against the chamber structure: the classification
// predicted by the report.
std::vector<std::size_t> predicted(const ChamberReport& r, const Rat& t)
{
    Surd s(t);
    for (std::size_t i = 0; i < r.walls.size(); ++i)
        if (r.walls[i] == s)
            return r.wall_maximizers[i].maximizers;
    if (t.is_zero())
        return r.maximizers0;
    if (t == 1)
        return r.maximizers1;
    for (const auto& c : r.chambers)
        if (c.lo < s && s < c.hi)
            return c.maximizers;
    throw InternalError("t outside every chamber");
}

Output cmd_family_analyze(const Options& opt, const std::string& path)
{
    auto spec = io::family_from(io::read_file(path));
    auto r = analyze(spec);
    Output out;
    std::string ws;
    for (const auto& w : r.walls)
        ws += (ws.empty() ? "" : " ") + w.str();
    out.plain = "walls " + (ws.empty() ? std::string("none") : ws);
    for (const auto& c : r.chambers) {
        out.plain += "\nchamber (" + c.lo.str() + ", " + c.hi.str() + "):";
        for (auto i : c.maximizers)
            out.plain += " " + label_str(spec.candidates()[i].label);
    }
    out.plain += "\nL(0) " + r.L0.str() + "\nL(1) " + r.L1.str() + "\ninv_L_affine " + (r.inv_L_affine ? "true" : "false");
    out.json = io::to_json(r);
    out.json["labels"] = Json::array();
    for (const auto& c : spec.candidates())
        out.json["labels"].push_back(label_str(c.label));
    if (opt.verify) {
        bool ok = true;
        std::vector<Rat> ts;
        for (int k = 0; k <= 60; ++k)
            ts.push_back(Rat(k, 60));
        for (const auto& w : r.walls)
            if (w.is_rational())
                ts.push_back(w.a());
        for (const auto& t : ts) {
            std::vector<std::size_t> best;
            Rat top;
            for (std::size_t i = 0; i < spec.size(); ++i) {
                Rat v = spec.candidates()[i].alpha(t) / spec.candidates()[i].beta(t);
                if (best.empty() || v > top) {
                    best = {i};
                    top = v;
                } else if (v == top) {
                    best.push_back(i);
                }
            }
            ok &= best == predicted(r, t);
        }
        out.agree = ok;
        out.detail = "direct argmax at 61 grid points and rational walls";
    }
    return out;
}

Output cmd_family_build(const std::string& apath, const std::string& bpath)
{
    auto a = io::ideal_from(io::read_file(apath));
    auto b = io::bfamily_from(io::read_file(bpath));
    auto spec = family_from_monomial(a, b);
    Output out;
    out.json = io::to_json(spec);
    out.plain = out.json.dump(2);
    return out;
}

Output cmd_family_stability(const std::string& path, const std::string& t0)
{
    auto spec = io::family_from(io::read_file(path));
    auto r = stability_neighborhood(spec, Rat::parse(t0));
    Output out;
    out.plain = label_str(spec.candidates()[r.maximizer].label) + "\ngap " + r.gap.str() + "\ninterval (" + r.lo.str() +
                ", " + r.hi.str() + ")";
    out.json = io::to_json(r);
    return out;
}

Output cmd_sharpness(const Options& opt, const std::string& weights, std::int64_t p)
{
    auto V = parse_weights(weights);
    auto w = sharpness_witness(V, p);
    Output out;
    out.plain = "N " + std::to_string(w.N) + "\np " + std::to_string(w.p) + "\nq " + std::to_string(w.q) + "\nwitness " +
                vec_str(w.witness.coords()) + "\ncondition1 " + (w.condition1 ? "true" : "false") + "\nwitness_outside " +
                (w.witness_outside ? "true" : "false");
    out.json = io::to_json(w);
    if (opt.verify) {
        bool ok = true;
        for (const auto& v : V) {
            Int vm = Int(static_cast<long>(w.q)) * std::min(v[0], v[1]);
            Int vj = Int(static_cast<long>(w.p)) * std::min(w.N * v[0], w.N * w.N * v[1]);
            ok &= vm >= vj;
        }
        std::vector<RatVec> target{{Rat(w.p * w.N), Rat(0)}, {Rat(0), Rat(w.p * w.N * w.N)}};
        RatVec y = w.witness.to_rat();
        ok &= !oracle::hull_member(target, y);
        ok &= ok == (w.condition1 && w.witness_outside);
        out.agree = ok;
        out.detail = "valuations recomputed, witness tested by LP";
    }
    return out;
}

Output cmd_infinity_check(const Options& opt, const std::string& path)
{
    auto F = io::polymap_from(io::read_file(path));
    auto r = nondegenerate_at_infinity(F);
    Output out;
    out.plain = r.nondegenerate ? "nondegenerate" : "degenerate at w=" + vec_str(r.offending->coords());
    out.json = io::to_json(r);
    if (opt.verify) {
        std::int64_t hi = 1;
        for (const auto& f : F.components())
            for (const auto& [e, c] : f)
                hi = std::max({hi, e[0], e[1]});
        out.agree = r.nondegenerate == !oracle::brute_degenerate_weight(F, hi).has_value();
        out.detail = "weight scan with faces dehomogenized at y = 1";
    }
    return out;
}

Output cmd_infinity_min(const Options& opt, const std::string& path, const std::string& local)
{
    auto T = io::table_from(io::read_file(path));
    Output out;
    if (!local.empty()) {
        std::set<std::string> labels;
        std::stringstream ss(local);
        std::string l;
        while (std::getline(ss, l, ','))
            labels.insert(l);
        auto v = loj_infinity_local(T, labels);
        out.plain = v.str();
        out.json = {{"value", io::to_json(v)}};
        return out;
    }
    auto m = loj_infinity_min(T);
    out.plain = m.value.str();
    out.json = io::to_json(m);
    if (opt.verify) {
        bool ok = true;
        for (const auto& r : T.rows())
            if (r.ord_x > 0)
                ok &= Rat(r.ord_y) >= m.value * Rat(r.ord_x);
        ok &= m.value.is_zero() == std::any_of(T.rows().begin(), T.rows().end(),
                                                [](const DivisorRow& r) { return r.ord_x > 0 && r.ord_y == 0; });
        out.agree = ok;
        out.detail = "divisor inequalities and the positivity criterion";
    }
    return out;
}

// Randomized cross-checks of the library against the reference routines.
Output cmd_selftest(std::uint64_t seed, int count)
{
    std::mt19937_64 rng(seed);
    auto uni = [&](std::int64_t lo, std::int64_t hi) { return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng); };
    auto ideal = [&](std::size_t dim, std::int64_t hi) {
        std::vector<ExpVec> g;
        for (std::size_t i = 0; i < dim; ++i)
            g.push_back(ExpVec::unit(dim, i, uni(1, hi)));
        for (int k = uni(0, 3); k > 0; --k) {
            std::vector<std::int64_t> c(dim);
            for (auto& x : c)
                x = uni(0, hi);
            g.emplace_back(c);
        }
        return MonomialIdeal(dim, g);
    };
    std::map<std::string, int> failures;
    int checks = 0;
    auto check = [&](const char* name, bool ok) {
        ++checks;
        if (!ok)
            ++failures[name];
    };
    for (int it = 0; it < count; ++it) {
        const std::size_t dim = 2 + static_cast<std::size_t>(it % 3 == 2);
        auto a = ideal(dim, dim == 2 ? 6 : 3);
        if (!a.is_proper())
            continue;
        auto P = newton_polyhedron(a);
        auto m = MonomialIdeal::maximal(dim);
        for_box(dim, max_coord(a), [&](const ExpVec& x) {
            auto r = x.to_rat();
            check("membership", member(P, x) == oracle::vrep_member(P, r));
        });
        ExpVec probe(std::vector<std::int64_t>(dim, uni(0, 4)));
        check("power oracle", power_oracle_member(a, probe).member == member(P, probe));
        auto r = loj_ideal(a, m);
        auto q = oracle::min_containment_power(m, a, 1, kMaxContainmentPower);
        check("loj", q && Int(*q) == r.value.ceil());
        check("closure invariance", loj_ideal(closure_generators(a), m).value == r.value);
        check("lct", lct(a) * oracle::diagonal_threshold(points_of(a)) == 1);
        check("theta", theta(a).theta >= 1);

        if (dim == 2) {
            std::vector<FamilyCandidate> cs;
            for (int k = uni(1, 5); k > 0; --k)
                cs.push_back({std::vector<std::int64_t>{k}, Rat(uni(1, 9)), Rat(uni(0, 5)), Rat(uni(2, 9)), Rat(uni(-1, 5))});
            FamilySpec fam(cs);
            auto rep = analyze(fam);
            for (const auto& c : rep.chambers)
                check("chamber constancy", maximizers_at(fam, Surd(c.sample)) == c.maximizers);
            for (const auto& w : rep.wall_maximizers)
                check("continuity", w.continuous);

            std::vector<Polynomial> comps(static_cast<std::size_t>(uni(1, 2)));
            for (auto& f : comps)
                for (int k = uni(1, 3); k > 0; --k)
                    f[ExpVec{uni(0, 3), uni(0, 3)}] = Rat(uni(1, 3));
            PolyMap F(2, comps);
            check("nondegeneracy", nondegenerate_at_infinity(F).nondegenerate ==
                                       !oracle::brute_degenerate_weight(F, 3).has_value());
        }
    }
    Output out;
    int total = 0;
    for (const auto& [k, v] : failures)
        total += v;
    out.plain = "selftest seed " + std::to_string(seed) + ": " + std::to_string(checks) + " checks, " +
                std::to_string(total) + " failures";
    for (const auto& [k, v] : failures)
        out.plain += "\n  " + k + ": " + std::to_string(v);
    out.json = {{"seed", seed}, {"checks", checks}, {"failures", failures}};
    out.agree = total == 0;
    return out;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact Lojasiewicz exponents, closures, multiplicities and families for monomial data"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_flag("--json", opt.json, "Print the full result as JSON");
    app.add_flag("--verify", opt.verify, "Also run the reference computation and compare");

    std::string ideal, a, b, path, mono, weights, exps, local, t0;
    unsigned p = 1, q = 1;
    std::int64_t n0 = 0, sp = 1;
    std::uint64_t seed = 1;
    int count = 100;

    auto* facets = app.add_subcommand("facets", "Newton polyhedron of an ideal");
    facets->add_option("--ideal", ideal, "Ideal JSON")->required();
    auto* closure = app.add_subcommand("closure", "Generators of the integral closure");
    closure->add_option("--ideal", ideal, "Ideal JSON")->required();
    auto* memb = app.add_subcommand("member", "Monomial in the integral closure, by the power test");
    memb->add_option("--ideal", ideal, "Ideal JSON")->required();
    memb->add_option("--monomial", mono, "Exponent, e.g. 2,3")->required();
    auto* contain = app.add_subcommand("contain", "Decide b^q in closure(a^p) with a certificate");
    contain->add_option("--b", b, "Ideal JSON")->required();
    contain->add_option("--q", q, "Power of b")->required();
    contain->add_option("--a", a, "Ideal JSON")->required();
    contain->add_option("--p", p, "Power of a")->required();
    auto* loj = app.add_subcommand("loj", "Lojasiewicz exponent of a with respect to b");
    loj->add_option("--a", a, "Ideal or filtration JSON")->required();
    loj->add_option("--b", b, "Ideal or filtration JSON")->required();
    auto* lctc = app.add_subcommand("lct", "Log canonical threshold");
    lctc->add_option("--ideal,--filtration", path, "Ideal or filtration JSON")->required();
    auto* th = app.add_subcommand("theta", "lct * Loj_m / d and rigidity");
    th->add_option("--ideal", ideal, "Ideal JSON")->required();
    auto* mixed = app.add_subcommand("mixed", "Mixed multiplicities e(I^[i], J^[d-i])");
    mixed->add_option("--I", a, "Ideal JSON")->required();
    mixed->add_option("--J", b, "Ideal JSON")->required();
    mixed->add_option("--n0", n0, "Start of the interpolation window (default: automatic)");
    auto* milnor = app.add_subcommand("milnor", "Milnor number and gradient exponent of a Brieskorn polynomial");
    milnor->add_option("--exponents", exps, "a_1,...,a_d, each >= 2")->required();
    auto* family = app.add_subcommand("family", "One-parameter families");
    family->require_subcommand(1);
    auto* fan = family->add_subcommand("analyze", "Walls and chambers");
    fan->add_option("file", path, "Family JSON")->required();
    auto* fbuild = family->add_subcommand("build", "Family from a monomial ideal and b(t) data");
    fbuild->add_option("--ideal", a, "Ideal JSON")->required();
    fbuild->add_option("--b", b, "b(t) JSON")->required();
    auto* fstab = family->add_subcommand("stability", "Interval of constant unique maximizer around t0");
    fstab->add_option("file", path, "Family JSON")->required();
    fstab->add_option("--t0", t0, "Rational in [0, 1]")->required();
    auto* sharp = app.add_subcommand("sharpness", "Witness ideal for a finite valuation set");
    sharp->add_option("--weights", weights, "Weights, e.g. 1,2;3,1")->required();
    sharp->add_option("--p", sp, "Power p");
    auto* icheck = app.add_subcommand("infinity-check", "Newton nondegeneracy at infinity (two variables)");
    icheck->add_option("file", path, "Polynomial map JSON")->required();
    auto* imin = app.add_subcommand("infinity-min", "Finite minimum over a divisor table");
    imin->add_option("file", path, "Divisor table JSON")->required();
    imin->add_option("--local", local, "Comma-separated labels of the divisors through the point");
    auto* self = app.add_subcommand("selftest", "Randomized cross-checks against the reference routines");
    self->add_option("--seed", seed, "Random seed");
    self->add_option("--count", count, "Number of random instances");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        int code = 0;
        Output out;
        if (*facets)
            out = cmd_facets(opt, ideal);
        else if (*closure)
            out = cmd_closure(opt, ideal);
        else if (*memb)
            out = cmd_member(opt, ideal, mono);
        else if (*contain)
            out = cmd_contain(opt, b, q, a, p);
        else if (*loj)
            out = cmd_loj(opt, a, b, code);
        else if (*lctc)
            out = cmd_lct(opt, path);
        else if (*th)
            out = cmd_theta(opt, ideal);
        else if (*mixed)
            out = cmd_mixed(opt, a, b, n0);
        else if (*milnor)
            out = cmd_milnor(opt, exps);
        else if (*fan)
            out = cmd_family_analyze(opt, path);
        else if (*fbuild)
            out = cmd_family_build(a, b);
        else if (*fstab)
            out = cmd_family_stability(path, t0);
        else if (*sharp)
            out = cmd_sharpness(opt, weights, sp);
        else if (*icheck)
            out = cmd_infinity_check(opt, path);
        else if (*imin)
            out = cmd_infinity_min(opt, path, local);
        else if (*self)
            out = cmd_selftest(seed, count);
        int rc = emit(opt, std::move(out));
        return rc != 0 ? rc : code;
    } catch (const InvalidInput& e) {
        std::cerr << "lojex: invalid input: " << e.what() << '\n';
        return 2;
    } catch (const Unsupported& e) {
        std::cerr << "lojex: unsupported: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "lojex: internal error: " << e.what() << '\n';
        return 1;
    }
}
