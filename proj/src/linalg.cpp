#include "lojex/linalg.hpp"

#include "lojex/error.hpp"

#include <utility>

namespace lojex {

std::vector<std::size_t> row_reduce(RatMatrix& m, std::size_t cols)
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
        std::size_t p = row;
        while (p < m.size() && m[p][c].is_zero())
            ++p;
        if (p == m.size())
            continue;
        std::swap(m[row], m[p]);
        Rat inv = m[row][c].inverse();
        for (std::size_t j = c; j < m[row].size(); ++j)
            m[row][j] *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][c].is_zero())
                continue;
            Rat f = m[r][c];
            for (std::size_t j = c; j < m[r].size(); ++j)
                m[r][j] -= f * m[row][j];
        }
        pivots.push_back(c);
        ++row;
    }
    return pivots;
}

namespace {

RatMatrix to_rat(const std::vector<std::vector<Int>>& rows)
{
    RatMatrix m;
    m.reserve(rows.size());
    for (const auto& r : rows) {
        RatVec v;
        v.reserve(r.size());
        for (const auto& x : r)
            v.emplace_back(x);
        m.push_back(std::move(v));
    }
    return m;
}

} // namespace

std::size_t integer_rank(const std::vector<std::vector<Int>>& rows, std::size_t cols)
{
    RatMatrix m = to_rat(rows);
    return row_reduce(m, cols).size();
}

std::vector<Int> integer_kernel_vector(const std::vector<std::vector<Int>>& rows, std::size_t cols)
{
    RatMatrix m = to_rat(rows);
    auto pivots = row_reduce(m, cols);
    if (pivots.size() + 1 != cols)
        throw InternalError("kernel is not one-dimensional");
    std::size_t free_col = 0;
    for (std::size_t k = 0; k < pivots.size() && pivots[k] == free_col; ++k)
        ++free_col;

    RatVec x(cols, Rat(0));
    x[free_col] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
        x[pivots[r]] = -m[r][free_col];

    Int den = 1;
    for (const auto& v : x)
        den = lcm(den, v.den());
    std::vector<Int> out(cols);
    Int g = 0;
    for (std::size_t i = 0; i < cols; ++i) {
        out[i] = x[i].num() * (den / x[i].den());
        g = gcd(g, out[i]);
    }
    for (auto& v : out)
        v /= g;
    return out;
}

std::optional<RatVec> solve(RatMatrix a, RatVec b)
{
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i)
        a[i].push_back(b[i]);
    auto pivots = row_reduce(a, n);
    if (pivots.size() != n)
        return std::nullopt;
    RatVec x(n);
    for (std::size_t i = 0; i < n; ++i)
        x[i] = a[i][n];
    return x;
}

} // namespace lojex
