#include "lojex/oracle.hpp"

#include "lojex/error.hpp"
#include "lojex/linalg.hpp"
#include "lojex/lp.hpp"

#include <numeric>

namespace lojex::oracle {

bool hull_member(const std::vector<RatVec>& points, std::span<const Rat> x)
{
    const std::size_t k = points.size();
    const std::size_t n = x.size();
    lp::Problem prob;
    prob.num_vars = k;
    prob.objective.assign(k, Rat(0));
    for (std::size_t i = 0; i < n; ++i) {
        lp::Constraint c{RatVec(k), lp::Relation::less_equal, x[i]};
        for (std::size_t j = 0; j < k; ++j)
            c.coeffs[j] = points[j][i];
        prob.rows.push_back(std::move(c));
    }
    prob.rows.push_back({RatVec(k, Rat(1)), lp::Relation::equal, Rat(1)});
    return lp::minimize(prob).status != lp::Status::infeasible;
}

bool vrep_member(const NewtonPolyhedron& poly, std::span<const Rat> x)
{
    return hull_member(poly.vertices(), x);
}

Rat diagonal_threshold(const std::vector<RatVec>& points)
{
    // Variables: lambda_1..lambda_k, s.  Minimize s.
    const std::size_t k = points.size();
    const std::size_t n = points.front().size();
    lp::Problem prob;
    prob.num_vars = k + 1;
    prob.objective.assign(k + 1, Rat(0));
    prob.objective[k] = 1;
    for (std::size_t i = 0; i < n; ++i) {
        lp::Constraint c{RatVec(k + 1), lp::Relation::less_equal, Rat(0)};
        for (std::size_t j = 0; j < k; ++j)
            c.coeffs[j] = points[j][i];
        c.coeffs[k] = -1;
        prob.rows.push_back(std::move(c));
    }
    RatVec ones(k + 1, Rat(1));
    ones[k] = 0;
    prob.rows.push_back({std::move(ones), lp::Relation::equal, Rat(1)});
    auto sol = lp::minimize(prob);
    if (sol.status != lp::Status::optimal)
        throw InternalError("diagonal threshold LP did not reach an optimum");
    return sol.value;
}


std::optional<unsigned> min_containment_power(const MonomialIdeal& b, const MonomialIdeal& a, unsigned p,
                                              unsigned max_q)
{
    std::vector<RatVec> target;
    for (const auto& g : a.gens()) {
        RatVec x = g.to_rat();
        for (auto& c : x)
            c *= Rat(p);
        target.push_back(std::move(x));
    }
    MonomialIdeal bq = b;
    for (unsigned q = 1; q <= max_q; ++q) {
        if (q > 1)
            bq = product(bq, b);
        bool all = true;
        for (const auto& g : bq.gens())
            if (!hull_member(target, g.to_rat())) {
                all = false;
                break;
            }
        if (all)
            return q;
    }
    return std::nullopt;
}

std::int64_t brute_colength(const MonomialIdeal& ideal)
{
    if (!ideal.is_m_primary())
        throw InvalidInput("colength needs an m-primary ideal");
    if (!ideal.is_proper())
        return 0;
    const std::size_t n = ideal.dim();
    std::vector<std::int64_t> cur(n, 0);
    std::int64_t count = 0;
    for (;;) {
        if (!ideal.contains(ExpVec(cur)))
            ++count;
        std::size_t i = 0;
        while (i < n && cur[i] + 1 == ideal.pure_power(i))
            cur[i++] = 0;
        if (i == n)
            return count;
        ++cur[i];
    }
}

std::size_t common_factor_degree(const std::vector<UniPoly>& polys)
{
    std::size_t total = 0, top = 0;
    for (const auto& p : polys) {
        if (p.is_zero())
            throw InvalidInput("zero polynomial");
        total += static_cast<std::size_t>(p.degree());
        top = std::max(top, static_cast<std::size_t>(p.degree()));
    }
    const std::size_t D = total + top + 1;
    RatMatrix rows;
    for (const auto& p : polys)
        for (std::size_t i = 0; i + static_cast<std::size_t>(p.degree()) < D; ++i) {
            RatVec row(D, Rat(0));
            for (std::size_t k = 0; k < p.coeffs().size(); ++k)
                row[i + k] = p.coeffs()[k];
            rows.push_back(std::move(row));
        }
    return D - row_reduce(rows, D).size();
}

std::optional<WeightVec> brute_degenerate_weight(const PolyMap& F, std::int64_t bound)
{
    if (F.n() != 2)
        throw Unsupported("two variables only");
    for (std::int64_t w1 = 1; w1 <= bound; ++w1)
        for (std::int64_t w2 = 1; w2 <= bound; ++w2) {
            if (std::gcd(w1, w2) != 1)
                continue;
            std::vector<UniPoly> polys;
            for (const auto& f : F.components()) {
                std::int64_t m = 0;
                bool first = true;
                for (const auto& [e, c] : f) {
                    auto v = w1 * e[0] + w2 * e[1];
                    m = first ? v : std::min(m, v);
                    first = false;
                }
                // (f)_w(x, 1), divided by the lowest power of x.
                std::map<std::int64_t, Rat> terms;
                for (const auto& [e, c] : f)
                    if (w1 * e[0] + w2 * e[1] == m)
                        terms[e[0]] += c;
                const auto low = terms.begin()->first;
                std::vector<Rat> co(static_cast<std::size_t>(terms.rbegin()->first - low + 1));
                for (const auto& [k, c] : terms)
                    co[static_cast<std::size_t>(k - low)] = c;
                polys.emplace_back(std::move(co));
            }
            if (common_factor_degree(polys) > 0)
                return WeightVec{w1, w2};
        }
    return std::nullopt;
}

} // namespace lojex::oracle
