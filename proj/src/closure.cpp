#include "lojex/closure.hpp"

#include "lojex/error.hpp"
#include "lojex/lp.hpp"

#include <algorithm>
#include <map>

namespace lojex {

namespace {

// Convex combination of `gens` dominated by x, if one exists.
std::optional<ConvexCombination> convex_witness(const std::vector<RatVec>& gens, std::span<const Rat> x)
{
    const std::size_t k = gens.size();
    const std::size_t n = x.size();
    lp::Problem prob;
    prob.num_vars = k;
    prob.objective.assign(k, Rat(0));
    for (std::size_t i = 0; i < n; ++i) {
        lp::Constraint c{RatVec(k), lp::Relation::less_equal, x[i]};
        for (std::size_t j = 0; j < k; ++j)
            c.coeffs[j] = gens[j][i];
        prob.rows.push_back(std::move(c));
    }
    prob.rows.push_back({RatVec(k, Rat(1)), lp::Relation::equal, Rat(1)});
    auto sol = lp::minimize(prob);
    if (sol.status == lp::Status::infeasible)
        return std::nullopt;
    ConvexCombination cc{RatVec(x.begin(), x.end()), sol.x, RatVec(n)};
    for (std::size_t i = 0; i < n; ++i) {
        Rat s = x[i];
        for (std::size_t j = 0; j < k; ++j)
            s -= sol.x[j] * gens[j][i];
        cc.slack[i] = s;
    }
    return cc;
}

bool check_combination(const std::vector<RatVec>& gens, const ConvexCombination& cc)
{
    if (cc.weights.size() != gens.size())
        return false;
    Rat total = 0;
    for (const auto& w : cc.weights) {
        if (w.sign() < 0)
            return false;
        total += w;
    }
    if (total != 1)
        return false;
    for (std::size_t i = 0; i < cc.point.size(); ++i) {
        if (cc.slack[i].sign() < 0)
            return false;
        Rat s = cc.slack[i];
        for (std::size_t j = 0; j < gens.size(); ++j)
            s += cc.weights[j] * gens[j][i];
        if (s != cc.point[i])
            return false;
    }
    return true;
}

std::vector<RatVec> as_points(const std::vector<ExpVec>& gens)
{
    std::vector<RatVec> pts;
    pts.reserve(gens.size());
    for (const auto& g : gens)
        pts.push_back(g.to_rat());
    return pts;
}

} // namespace

bool ClosureCertificate::recheck(const std::vector<RatVec>& target) const
{
    if (const auto* v = std::get_if<ViolatedFacet>(&witness)) {
        if (member)
            return false;
        for (const auto& g : target)
            if (dot(v->normal, g) < v->offset)
                return false;
        RatVec m = v->monomial.to_rat();
        Rat deficit = v->offset - dot(v->normal, m);
        return deficit == v->deficit && deficit.sign() > 0;
    }
    if (const auto* c = std::get_if<ConvexCertificate>(&witness)) {
        if (!member)
            return false;
        // The certificate's generators must themselves lie in the target.
        for (const auto& g : c->generators)
            if (!std::any_of(target.begin(), target.end(), [&](const RatVec& t) { return t == g; }))
                return false;
        return std::all_of(c->items.begin(), c->items.end(),
                           [&](const ConvexCombination& cc) { return check_combination(c->generators, cc); });
    }
    const auto& pc = std::get<PowerCertificate>(witness);
    if (!member || pc.k <= 0)
        return false;
    std::int64_t count = 0;
    RatVec sum(pc.monomial.size(), Rat(0));
    for (const auto& [g, mult] : pc.parts) {
        if (mult <= 0)
            return false;
        RatVec gr = g.to_rat();
        if (!std::any_of(target.begin(), target.end(), [&](const RatVec& t) { return t == gr; }))
            return false;
        count += mult;
        for (std::size_t i = 0; i < sum.size(); ++i)
            sum[i] += Rat(mult) * gr[i];
    }
    if (count != pc.k)
        return false;
    for (std::size_t i = 0; i < sum.size(); ++i)
        if (Rat(pc.k * pc.monomial[i]) < sum[i])
            return false;
    return true;
}

MonomialIdeal closure_generators(const MonomialIdeal& ideal)
{
    const std::size_t n = ideal.dim();
    auto poly = newton_polyhedron(ideal);

    // A minimal lattice point m of NP has m_i <= max over vertices of v_i:
    // if m_i exceeded it, m - e_i would still dominate the same convex
    // combination of vertices, hence lie in NP.
    std::vector<std::int64_t> box(n, 0);
    for (const auto& v : poly.vertices())
        for (std::size_t i = 0; i < n; ++i)
            box[i] = std::max(box[i], v[i].ceil().get_si());

    std::vector<ExpVec> found;
    std::vector<std::int64_t> cur(n, 0);
    for (;;) {
        ExpVec m(cur);
        if (poly.contains(m))
            found.push_back(m);
        std::size_t i = 0;
        while (i < n && cur[i] == box[i]) {
            cur[i] = 0;
            ++i;
        }
        if (i == n)
            break;
        ++cur[i];
    }
    return MonomialIdeal(n, std::move(found));
}

ClosureCertificate contains_closure(const MonomialIdeal& b, unsigned q, const MonomialIdeal& a, unsigned p,
                                    unsigned max_q)
{
    if (a.dim() != b.dim())
        throw InvalidInput("containment between ideals of different dimensions");
    if (q == 0 || p == 0)
        throw InvalidInput("containment exponents must be positive");
    if (q > max_q)
        throw Unsupported("q = " + std::to_string(q) + " exceeds the power cap " + std::to_string(max_q));

    const auto target = scale(newton_polyhedron(a), Rat(p));
    const auto bq = power(b, q);

    ClosureCertificate cert;
    for (const auto& g : bq.gens()) {
        RatVec x = g.to_rat();
        const Facet* worst = nullptr;
        Rat worst_deficit;
        for (const auto& f : target.facets()) {
            Rat deficit = f.offset - dot(f.normal, x);
            if (deficit.sign() > 0 && (!worst || deficit > worst_deficit)) {
                worst = &f;
                worst_deficit = deficit;
            }
        }
        if (worst) {
            cert.member = false;
            cert.witness = ViolatedFacet{worst->normal, worst->offset, g, worst_deficit};
            return cert;
        }
    }

    ConvexCertificate convex{target.vertices(), {}};
    for (const auto& g : bq.gens()) {
        RatVec x = g.to_rat();
        auto cc = convex_witness(convex.generators, x);
        if (!cc)
            throw InternalError("facet test and convex combination disagree");
        convex.items.push_back(std::move(*cc));
    }
    cert.member = true;
    cert.witness = std::move(convex);
    return cert;
}

PowerMembership power_oracle_member(const MonomialIdeal& ideal, const ExpVec& m)
{
    if (m.size() != ideal.dim())
        throw InvalidInput("monomial dimension does not match the ideal");
    const auto& gens = ideal.gens();
    auto cc = convex_witness(as_points(gens), m.to_rat());
    PowerMembership out;
    if (!cc)
        return out;
    out.member = true;

    Int den = 1;
    for (const auto& w : cc->weights)
        den = lcm(den, w.den());
    if (!den.fits_slong_p())
        throw Unsupported("power certificate exponent too large");
    const std::int64_t k_lp = den.get_si();

    // Search for a smaller k through the sumsets G, G+G, ... (minimalized,
    // with provenance) before falling back to the LP decomposition.
    constexpr std::int64_t kSearchCap = 24;
    struct Node {
        ExpVec sum;
        std::size_t parent;
        std::size_t gen;
    };
    std::vector<std::vector<Node>> levels;
    levels.push_back({Node{ExpVec::zero(m.size()), 0, 0}});
    for (std::int64_t k = 1; k < std::min(k_lp, kSearchCap + 1); ++k) {
        std::map<ExpVec, Node> next;
        const auto& prev = levels.back();
        for (std::size_t pi = 0; pi < prev.size(); ++pi)
            for (std::size_t gi = 0; gi < gens.size(); ++gi) {
                ExpVec s = prev[pi].sum + gens[gi];
                next.try_emplace(s, Node{s, pi, gi});
            }
        std::vector<ExpVec> keys;
        for (const auto& [s, node] : next)
            keys.push_back(s);
        keys = minimalize(std::move(keys));
        std::vector<Node> level;
        for (const auto& s : keys)
            level.push_back(next.at(s));
        levels.push_back(std::move(level));

        ExpVec km = k * m;
        for (const auto& node : levels.back()) {
            if (!node.sum.divides(km))
                continue;
            std::map<ExpVec, std::int64_t> mult;
            std::size_t idx = static_cast<std::size_t>(&node - levels.back().data());
            for (std::size_t lvl = levels.size() - 1; lvl > 0; --lvl) {
                const Node& cur = levels[lvl][idx];
                ++mult[gens[cur.gen]];
                idx = cur.parent;
            }
            PowerCertificate pc{m, k, {mult.begin(), mult.end()}};
            out.k = k;
            out.certificate = std::move(pc);
            return out;
        }
    }

    PowerCertificate pc{m, k_lp, {}};
    for (std::size_t j = 0; j < gens.size(); ++j) {
        Rat mult = cc->weights[j] * Rat(k_lp);
        if (mult.sign() > 0)
            pc.parts.emplace_back(gens[j], mult.to_int64());
    }
    out.k = k_lp;
    out.certificate = std::move(pc);
    return out;
}

} // namespace lojex
