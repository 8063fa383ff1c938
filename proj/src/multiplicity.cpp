#include "lojex/multiplicity.hpp"

#include "lojex/closure.hpp"
#include "lojex/error.hpp"
#include "lojex/exponent.hpp"
#include "lojex/linalg.hpp"

#include <algorithm>
#include <limits>

namespace lojex {

namespace {

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

// Column heights of a monomial ideal K in dimension d: for every c in a box of
// N^(d-1), f(c) = min { k : x^(c, k) in K }. Multiplying K by an ideal I is
// f'(c) = min over g in I with g' <= c of f(c - g') + g_last, where g' drops
// the last coordinate. The box must contain every column of positive height
// of the final ideal; columns outside it have height 0.
class Staircase {
public:
    Staircase(std::size_t d, std::vector<std::int64_t> dims) : d_(d), dims_(std::move(dims))
    {
        std::size_t cells = 1;
        strides_.assign(dims_.size(), 0);
        for (std::size_t i = 0; i < dims_.size(); ++i) {
            strides_[i] = static_cast<std::int64_t>(cells);
            cells *= static_cast<std::size_t>(dims_[i]);
        }
        f_.assign(cells, 0); // the unit ideal
    }

    void multiply(const MonomialIdeal& ideal)
    {
        const std::size_t k = d_ - 1;
        std::vector<std::int64_t> next(f_.size(), kInf);
        std::vector<std::int64_t> c(k, 0);
        for (std::size_t idx = 0; idx < f_.size(); ++idx) {
            std::int64_t best = kInf;
            for (const auto& g : ideal.gens()) {
                std::int64_t off = 0;
                bool fits = true;
                for (std::size_t i = 0; i < k && fits; ++i) {
                    fits = g[i] <= c[i];
                    off += g[i] * strides_[i];
                }
                if (!fits)
                    continue;
                std::int64_t h = f_[idx - static_cast<std::size_t>(off)];
                if (h < kInf)
                    best = std::min(best, h + g[k]);
            }
            next[idx] = best;
            for (std::size_t i = 0; i < k; ++i) {
                if (++c[i] < dims_[i])
                    break;
                c[i] = 0;
            }
        }
        f_ = std::move(next);
    }

    std::int64_t colength() const
    {
        std::int64_t s = 0;
        for (auto h : f_) {
            if (h >= kInf)
                throw InternalError("unbounded column in a colength count");
            s += h;
        }
        return s;
    }

private:
    std::size_t d_;
    std::vector<std::int64_t> dims_;
    std::vector<std::int64_t> strides_;
    std::vector<std::int64_t> f_;
};

void require_m_primary(const MonomialIdeal& I)
{
    if (!I.is_m_primary())
        throw InvalidInput("colength needs an m-primary ideal");
}

std::vector<std::int64_t> box_for(const MonomialIdeal& I, std::int64_t n1, const MonomialIdeal& J, std::int64_t n2)
{
    std::vector<std::int64_t> dims;
    for (std::size_t i = 0; i + 1 < I.dim(); ++i)
        dims.push_back(std::max<std::int64_t>(1, n1 * I.pure_power(i) + n2 * J.pure_power(i)));
    return dims;
}

std::int64_t factorial(std::size_t n)
{
    std::int64_t f = 1;
    for (std::size_t k = 2; k <= n; ++k)
        f *= static_cast<std::int64_t>(k);
    return f;
}

std::int64_t binomial(std::size_t n, std::size_t k) { return factorial(n) / (factorial(k) * factorial(n - k)); }

// values[i][j] = length(R / I^(n0+i) J^(n0+j)) for 0 <= i, j < size.
std::vector<std::vector<std::int64_t>> colength_grid(const MonomialIdeal& I, const MonomialIdeal& J, std::int64_t n0,
                                                     std::int64_t size)
{
    const std::int64_t top = n0 + size - 1;
    Staircase base(I.dim(), box_for(I, top, J, top));
    for (std::int64_t k = 0; k < n0; ++k) {
        base.multiply(I);
        base.multiply(J);
    }
    std::vector<std::vector<std::int64_t>> values(static_cast<std::size_t>(size));
    for (std::int64_t i = 0; i < size; ++i) {
        if (i > 0)
            base.multiply(I);
        Staircase cur = base;
        for (std::int64_t j = 0; j < size; ++j) {
            if (j > 0)
                cur.multiply(J);
            values[static_cast<std::size_t>(i)].push_back(cur.colength());
        }
    }
    return values;
}

// Fits the total-degree-d polynomial on the triangle {i + j <= d} of the
// window at offset (s, s), checks it on the full (d+2) x (d+2) square and
// returns the normalized top-degree coefficients.
std::optional<std::vector<std::int64_t>> fit_window(const std::vector<std::vector<std::int64_t>>& grid,
                                                    std::int64_t n0, std::size_t s, std::size_t d)
{
    std::vector<std::pair<std::size_t, std::size_t>> monos; // (a, b): n1^a n2^b
    for (std::size_t t = 0; t <= d; ++t)
        for (std::size_t a = 0; a <= t; ++a)
            monos.emplace_back(a, t - a);
    auto row_at = [&](std::size_t i, std::size_t j) {
        Rat n1(n0 + static_cast<std::int64_t>(s + i));
        Rat n2(n0 + static_cast<std::int64_t>(s + j));
        RatVec row;
        for (auto [a, b] : monos)
            row.push_back(pow(n1, static_cast<unsigned>(a)) * pow(n2, static_cast<unsigned>(b)));
        return row;
    };

    RatMatrix A;
    RatVec rhs;
    for (std::size_t i = 0; i <= d; ++i)
        for (std::size_t j = 0; i + j <= d; ++j) {
            A.push_back(row_at(i, j));
            rhs.emplace_back(grid[s + i][s + j]);
        }
    auto coeffs = solve(std::move(A), std::move(rhs));
    if (!coeffs)
        throw InternalError("interpolation system is singular");

    for (std::size_t i = 0; i < d + 2; ++i)
        for (std::size_t j = 0; j < d + 2; ++j) {
            auto row = row_at(i, j);
            Rat v = 0;
            for (std::size_t k = 0; k < row.size(); ++k)
                v += row[k] * (*coeffs)[k];
            if (v != Rat(grid[s + i][s + j]))
                return std::nullopt;
        }

    std::vector<std::int64_t> e(d + 1);
    for (std::size_t k = 0; k < monos.size(); ++k) {
        auto [a, b] = monos[k];
        if (a + b != d)
            continue;
        Rat v = (*coeffs)[k] * Rat(factorial(a) * factorial(b));
        if (!v.is_integer() || v.sign() < 0)
            return std::nullopt;
        e[a] = v.to_int64();
    }
    return e;
}

std::int64_t max_coordinate(const MonomialIdeal& I)
{
    std::int64_t m = 1;
    for (const auto& g : I.gens())
        for (auto x : g)
            m = std::max(m, x);
    return m;
}

Int root_floor(const Int& x, unsigned d)
{
    Int r;
    mpz_root(r.get_mpz_t(), x.get_mpz_t(), d);
    return r;
}

bool is_power(const Int& x, unsigned d) { return mpz_root(Int().get_mpz_t(), x.get_mpz_t(), d) != 0; }

} // namespace

std::int64_t colength(const MonomialIdeal& ideal)
{
    require_m_primary(ideal);
    Staircase s(ideal.dim(), box_for(ideal, 1, ideal, 0));
    s.multiply(ideal);
    return s.colength();
}

std::int64_t colength(const MonomialIdeal& I, std::int64_t n1, const MonomialIdeal& J, std::int64_t n2)
{
    if (I.dim() != J.dim())
        throw InvalidInput("ideals of different dimensions");
    require_m_primary(I);
    require_m_primary(J);
    if (n1 < 0 || n2 < 0)
        throw InvalidInput("negative power");
    Staircase s(I.dim(), box_for(I, n1, J, n2));
    for (std::int64_t k = 0; k < n1; ++k)
        s.multiply(I);
    for (std::int64_t k = 0; k < n2; ++k)
        s.multiply(J);
    return s.colength();
}

MixedTable mixed_multiplicities(const MonomialIdeal& I, const MonomialIdeal& J, std::int64_t n0)
{
    if (I.dim() != J.dim())
        throw InvalidInput("ideals of different dimensions");
    const std::size_t d = I.dim();
    if (d > kMaxMixedDim)
        throw Unsupported("mixed multiplicities are interpolated only up to dimension 3");
    require_m_primary(I);
    require_m_primary(J);
    if (n0 <= 0)
        n0 = 2 * std::max(max_coordinate(I), max_coordinate(J));

    const auto size = static_cast<std::int64_t>(d) + 3;
    for (int attempt = 0; attempt < 3; ++attempt, n0 *= 2) {
        auto grid = colength_grid(I, J, n0, size);
        auto first = fit_window(grid, n0, 0, d);
        auto second = fit_window(grid, n0, 1, d);
        if (!first || !second || *first != *second)
            continue;

        MixedTable t{d, I, J, *first, n0, static_cast<std::int64_t>(d) + 1, true};
        const Rat scale(factorial(d));
        if (Rat(t.e[d]) != scale * covolume(newton_polyhedron(I)) ||
            Rat(t.e[0]) != scale * covolume(newton_polyhedron(J)))
            throw InternalError("mixed table disagrees with the covolume of a pure entry");
        return t;
    }
    throw InternalError("colength polynomial did not stabilise within the window cap");
}

std::int64_t product_multiplicity(const MixedTable& t)
{
    std::int64_t s = 0;
    for (std::size_t i = 0; i <= t.dim; ++i)
        s += binomial(t.dim, i) * t.e[i];
    return s;
}

bool root_sum_le(const Int& x, const Int& y, const Int& z, unsigned d)
{
    if (x < 0 || y < 0 || z < 0 || d == 0)
        throw InvalidInput("root comparison needs nonnegative integers and d >= 1");
    if (y == 0 || z == 0) {
        return x <= y + z;
    }
    // If y / z = r^d with r rational, both roots are rational multiples of
    // z^(1/d) and the comparison is x <= (1 + r)^d z. Otherwise the two sides
    // cannot be equal (real radicals with irrational ratios are linearly
    // independent over Q), so interval refinement terminates.
    Rat ratio(y, z);
    if (is_power(ratio.num(), d) && is_power(ratio.den(), d)) {
        Rat r(root_floor(ratio.num(), d), root_floor(ratio.den(), d));
        return Rat(x) <= pow(Rat(1) + r, d) * Rat(z);
    }
    for (unsigned k = 0; k < 4096; k += 4) {
        Int scale = Int(1) << (k * d);
        Int lx = root_floor(x * scale, d), ly = root_floor(y * scale, d), lz = root_floor(z * scale, d);
        // lx/2^k <= x^(1/d) < (lx+1)/2^k, same for y and z.
        if (lx + 1 <= ly + lz)
            return true;
        if (lx >= ly + lz + 2)
            return false;
    }
    throw InternalError("root comparison did not separate");
}

TeissierReport check_teissier(const MonomialIdeal& I, const MonomialIdeal& J, const std::vector<unsigned>& powers)
{
    const std::size_t d = I.dim();
    const auto m = MonomialIdeal::maximal(d);
    TeissierReport r{mixed_multiplicities(I, J), mixed_multiplicities(I, m), mixed_multiplicities(J, m), {}, {}, {}, {}, false};
    bool ok = true;

    const auto& e = r.table.e;
    for (std::size_t i = 1; i + 1 <= d; ++i) {
        LogConvexityCheck c{i, e[i] * e[i], e[i - 1] * e[i + 1], false};
        c.holds = c.square <= c.product;
        ok = ok && c.holds;
        r.log_convexity.push_back(c);
    }

    r.minkowski.e_product = product_multiplicity(r.table);
    r.minkowski.e_I = e[d];
    r.minkowski.e_J = e[0];
    r.minkowski.holds = root_sum_le(Int(static_cast<long>(r.minkowski.e_product)), Int(static_cast<long>(e[d])),
                                    Int(static_cast<long>(e[0])), static_cast<unsigned>(d));
    ok = ok && r.minkowski.holds;

    const auto& eI = r.table_I_m.e;
    const auto& eJ = r.table_J_m.e;
    if (J.is_proper()) {
        for (unsigned p : powers) {
            unsigned q = 1;
            while (!contains_closure(J, q, I, p).member) {
                if (++q > kMaxContainmentPower)
                    throw Unsupported("no containment power within the cap");
            }
            for (std::size_t i = 1; i <= d; ++i) {
                ContainmentBound b{p, q, i, 0, 0, false};
                Int qi, pi;
                mpz_ui_pow_ui(qi.get_mpz_t(), q, i);
                mpz_ui_pow_ui(pi.get_mpz_t(), p, i);
                b.lhs = qi * Int(static_cast<long>(eJ[i]));
                b.rhs = pi * Int(static_cast<long>(eI[i]));
                b.holds = b.lhs >= b.rhs;
                ok = ok && b.holds;
                r.containment.push_back(std::move(b));
            }
        }

        Rat L = loj_ideal(I, J).value;
        for (std::size_t i = 1; i <= d; ++i) {
            LojBound b{i, L, pow(L, static_cast<unsigned>(i)) * Rat(eJ[i]), Rat(eI[i]), false};
            b.holds = b.lhs >= b.rhs;
            ok = ok && b.holds;
            r.loj_bounds.push_back(std::move(b));
        }
    }
    r.all_hold = ok;
    return r;
}

MilnorReport milnor_and_gradient(const std::vector<std::int64_t>& exponents)
{
    if (exponents.empty())
        throw InvalidInput("no exponents");
    const std::size_t d = exponents.size();
    if (d > kMaxHullDim)
        throw Unsupported("Brieskorn exponents beyond the supported dimension");
    std::vector<std::int64_t> jac;
    std::int64_t product = 1;
    for (auto a : exponents) {
        if (a < 2)
            throw InvalidInput("Brieskorn exponents must be at least 2");
        jac.push_back(a - 1);
        product *= a - 1;
    }
    const auto J = MonomialIdeal::diagonal(jac);

    MilnorReport r;
    r.exponents = exponents;
    r.mu = colength(J);
    if (r.mu != product)
        throw InternalError("Milnor number count disagrees with the product formula");
    r.loj = loj_ideal(J, MonomialIdeal::maximal(d)).value;

    std::vector<std::pair<std::size_t, Int>> entries;
    if (d <= kMaxMixedDim) {
        auto t = mixed_multiplicities(J, MonomialIdeal::maximal(d));
        for (std::size_t i = 1; i <= d; ++i)
            entries.emplace_back(i, Int(static_cast<long>(t.e[i])));
    } else {
        // Only the pure entry: e(J) = colength for a monomial parameter ideal.
        entries.emplace_back(d, Int(static_cast<long>(r.mu)));
    }
    bool ok = true;
    for (auto& [i, rhs] : entries) {
        GradientBound b{i, pow(r.loj, static_cast<unsigned>(i)), rhs, false};
        b.holds = b.lhs >= Rat(b.rhs);
        ok = ok && b.holds;
        r.bounds.push_back(std::move(b));
    }
    r.all_hold = ok;
    return r;
}

} // namespace lojex
