#include "lojex/exponent.hpp"

#include "lojex/error.hpp"
#include "lojex/linalg.hpp"
#include "lojex/lp.hpp"

#include <algorithm>
#include <set>

namespace lojex {

namespace {

template <class... Fs>
struct overloaded : Fs... {
    using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

std::size_t validate(const FiltrationSpec::Kind& kind)
{
    return std::visit(
        overloaded{
            [](const PowerFiltration& p) { return p.ideal.dim(); },
            [](const LinearFiltration& l) {
                if (l.dim == 0)
                    throw InvalidInput("linear filtration needs a positive dimension");
                if (l.constraints.empty())
                    throw InvalidInput("linear filtration needs at least one constraint");
                for (const auto& c : l.constraints) {
                    if (c.w.size() != l.dim)
                        throw InvalidInput("linear form dimension mismatch");
                    if (c.c.sign() <= 0)
                        throw InvalidInput("linear form level must be positive");
                }
                return l.dim;
            },
            [](const ProductFiltration& p) {
                if (p.factors.empty())
                    throw InvalidInput("product filtration needs at least one factor");
                const std::size_t n = p.factors.front().ideal.dim();
                for (const auto& f : p.factors) {
                    if (f.ideal.dim() != n)
                        throw InvalidInput("product factor dimension mismatch");
                    if (f.lambda.sign() <= 0)
                        throw InvalidInput("product exponent must be positive");
                }
                return n;
            },
        },
        kind);
}

// Vertices of {x >= 0 : <w_j, x> >= c_j}: feasible intersections of n of the
// bounding hyperplanes.
std::vector<RatVec> linear_vertices(const LinearFiltration& l)
{
    const std::size_t n = l.dim;
    std::vector<std::pair<RatVec, Rat>> planes;
    for (const auto& c : l.constraints) {
        RatVec row;
        for (auto w : c.w.coords())
            row.emplace_back(w);
        planes.emplace_back(std::move(row), c.c);
    }
    for (std::size_t i = 0; i < n; ++i) {
        RatVec row(n, Rat(0));
        row[i] = 1;
        planes.emplace_back(std::move(row), Rat(0));
    }
    auto feasible = [&](const RatVec& x) {
        for (const auto& v : x)
            if (v.sign() < 0)
                return false;
        for (const auto& c : l.constraints)
            if (dot(c.w, x) < c.c)
                return false;
        return true;
    };

    std::vector<RatVec> out;
    std::vector<bool> pick(planes.size(), false);
    std::fill(pick.end() - static_cast<std::ptrdiff_t>(n), pick.end(), true);
    do {
        RatMatrix a;
        RatVec b;
        for (std::size_t k = 0; k < planes.size(); ++k)
            if (pick[k]) {
                a.push_back(planes[k].first);
                b.push_back(planes[k].second);
            }
        if (auto x = solve(std::move(a), std::move(b)); x && feasible(*x))
            out.push_back(std::move(*x));
    } while (std::next_permutation(pick.begin(), pick.end()));
    if (out.empty())
        throw InternalError("linear region without vertices");
    return out;
}

Rat linear_support(const WeightVec& u, const LinearFiltration& l)
{
    const std::size_t n = l.dim;
    lp::Problem prob;
    prob.num_vars = n;
    for (auto x : u.coords())
        prob.objective.emplace_back(x);
    for (const auto& c : l.constraints) {
        RatVec row;
        for (auto w : c.w.coords())
            row.emplace_back(w);
        prob.rows.push_back({std::move(row), lp::Relation::greater_equal, c.c});
    }
    auto sol = lp::minimize(prob);
    if (sol.status != lp::Status::optimal)
        throw InternalError("linear filtration support LP has no optimum");
    return sol.value;
}

Rat h_m(const WeightVec& u) { return Rat(*std::min_element(u.coords().begin(), u.coords().end())); }

void collect_maximizers(LojResult& r)
{
    if (r.infinite)
        return;
    for (const auto& c : r.per_candidate)
        if (c.ratio == r.value)
            r.maximizers.push_back(c.u);
}

} // namespace

FiltrationSpec::FiltrationSpec(Kind kind) : kind_(std::move(kind)), dim_(validate(kind_)) {}

Rat v_filtration(const WeightVec& u, const FiltrationSpec& spec)
{
    if (u.size() != spec.dim())
        throw InvalidInput("weight dimension does not match the filtration");
    return std::visit(overloaded{
                          [&](const PowerFiltration& p) { return support(p.ideal, u); },
                          [&](const LinearFiltration& l) { return linear_support(u, l); },
                          [&](const ProductFiltration& p) {
                              Rat s = 0;
                              for (const auto& f : p.factors)
                                  s += f.lambda * support(f.ideal, u);
                              return s;
                          },
                      },
                      spec.kind());
}

NewtonPolyhedron asymptotic_region(const FiltrationSpec& spec)
{
    return std::visit(overloaded{
                          [](const PowerFiltration& p) { return newton_polyhedron(p.ideal); },
                          [](const LinearFiltration& l) {
                              return NewtonPolyhedron::from_points(l.dim, linear_vertices(l));
                          },
                          [](const ProductFiltration& p) {
                              auto acc = scale(newton_polyhedron(p.factors.front().ideal), p.factors.front().lambda);
                              for (std::size_t j = 1; j < p.factors.size(); ++j)
                                  acc = minkowski_sum(
                                      acc, scale(newton_polyhedron(p.factors[j].ideal), p.factors[j].lambda));
                              return acc;
                          },
                      },
                      spec.kind());
}

LojResult loj_ideal(const MonomialIdeal& a, const MonomialIdeal& b)
{
    if (a.dim() != b.dim())
        throw InvalidInput("ideals of different dimensions");
    if (!a.is_m_primary())
        throw InvalidInput("the Lojasiewicz exponent needs an m-primary ideal");
    if (!b.is_proper())
        throw InvalidInput("the comparison ideal must be proper");

    LojResult r;
    for (const auto& f : newton_polyhedron(a).compact_facets()) {
        Rat vb = support(b, f.normal);
        // A proper monomial ideal has positive order along every strictly
        // positive weight.
        if (vb.sign() <= 0)
            throw InternalError("proper ideal with vanishing support on a compact normal");
        Rat ratio = f.offset / vb;
        if (r.per_candidate.empty() || ratio > r.value)
            r.value = ratio;
        r.per_candidate.push_back({f.normal, f.offset, vb, ratio});
    }
    if (r.per_candidate.empty())
        throw InvalidInput("the ideal has no compact facets (unit ideal)");
    collect_maximizers(r);
    return r;
}

LojResult loj_filtration(const FiltrationSpec& a, const FiltrationSpec& b)
{
    if (a.dim() != b.dim())
        throw InvalidInput("filtrations of different dimensions");
    if (a.is_power() && b.is_power()) {
        const auto& ia = std::get<PowerFiltration>(a.kind()).ideal;
        if (ia.is_m_primary())
            return loj_ideal(ia, std::get<PowerFiltration>(b.kind()).ideal);
    }

    const std::size_t n = a.dim();
    std::set<WeightVec> rays;
    for (const auto* s : {&a, &b}) {
        const auto region = asymptotic_region(*s);
        for (const auto& f : region.facets())
            rays.insert(f.normal);
    }
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::int64_t> e(n, 0);
        e[i] = 1;
        rays.insert(WeightVec(std::move(e)));
    }

    LojResult r;
    r.lower_bound_only = n >= 3;
    for (const auto& u : rays) {
        Rat va = v_filtration(u, a);
        Rat vb = v_filtration(u, b);
        if (vb.sign() == 0) {
            if (va.sign() > 0)
                r.infinite = true;
            continue;
        }
        Rat ratio = va / vb;
        if (r.per_candidate.empty() || ratio > r.value)
            r.value = ratio;
        r.per_candidate.push_back({u, va, vb, ratio});
    }
    if (!r.infinite && r.per_candidate.empty())
        throw InvalidInput("no admissible candidate valuation");
    collect_maximizers(r);
    return r;
}

LctResult lct(const NewtonPolyhedron& region)
{
    if (!region.bounded_complement())
        throw InvalidInput("lct needs a region with bounded complement (m-primary)");
    LctResult r;
    bool first = true;
    for (const auto& f : region.compact_facets()) {
        Rat v = Rat(f.normal.log_discrepancy()) / f.offset;
        if (first || v < r.value) {
            r.value = v;
            r.minimizers.clear();
        }
        if (v == r.value)
            r.minimizers.push_back(f.normal);
        first = false;
    }
    if (first)
        throw InvalidInput("lct of the unit ideal is not defined");
    return r;
}

Rat lct(const MonomialIdeal& ideal) { return lct(newton_polyhedron(ideal)).value; }

Rat lct(const FiltrationSpec& spec) { return lct(asymptotic_region(spec)).value; }

ThetaReport theta(const MonomialIdeal& ideal)
{
    const std::size_t n = ideal.dim();
    auto poly = newton_polyhedron(ideal);
    auto l = lct(poly);
    auto loj = loj_ideal(ideal, MonomialIdeal::maximal(n));

    ThetaReport t;
    t.lct = l.value;
    t.loj_m = loj.value;
    t.theta = t.lct * t.loj_m / Rat(static_cast<long>(n));
    for (const auto& f : poly.compact_facets()) {
        if (!f.normal.is_diagonal())
            continue;
        t.diagonal_facet = std::make_pair(f.normal, f.offset);
        const bool attains_lct = Rat(f.normal.log_discrepancy()) / f.offset == t.lct;
        const bool attains_loj = f.offset / h_m(f.normal) == t.loj_m;
        t.rigid = attains_lct && attains_loj;
    }
    return t;
}

SharpnessWitness sharpness_witness(const std::vector<WeightVec>& V, std::int64_t p)
{
    if (V.empty())
        throw InvalidInput("empty valuation set");
    if (p < 1)
        throw InvalidInput("p must be positive");
    Rat max_ratio;
    bool first = true;
    for (const auto& v : V) {
        if (v.size() != 2 || !v.strictly_positive())
            throw InvalidInput("sharpness valuations must be strictly positive weights on two variables");
        Rat r(v[0], v[1]);
        if (first || r > max_ratio)
            max_ratio = r;
        first = false;
    }

    SharpnessWitness w;
    // Smallest N >= 2 with N > 1 + max a/b.
    w.N = std::max<std::int64_t>(2, Int((Rat(1) + max_ratio).floor() + 1).get_si());
    for (const auto& v : V)
        w.M = std::max(w.M, Rat(v[0], std::min(v[0], v[1])).ceil().get_si());
    w.p = p;
    w.q = p * w.N * w.M;
    w.witness = ExpVec{0, w.q};

    const auto m = MonomialIdeal::maximal(2);
    const auto jn = MonomialIdeal(2, {ExpVec{w.N, 0}, ExpVec{0, w.N * w.N}});
    w.condition1 = true;
    for (const auto& v : V) {
        SharpnessCheck c{v, Rat(w.q) * support(m, v), Rat(p) * support(jn, v)};
        w.condition1 = w.condition1 && c.v_mq >= c.v_jnp;
        w.checks.push_back(std::move(c));
    }
    w.witness_value = Rat(w.q, w.N * w.N);
    w.witness_outside = !scale(newton_polyhedron(jn), Rat(p)).contains(w.witness);
    return w;
}

} // namespace lojex
