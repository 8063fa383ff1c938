#include "lojex/lp.hpp"

#include "lojex/error.hpp"

#include <optional>

namespace lojex::lp {

namespace {

// Dense tableau: rows_[r] = coefficients over all columns followed by the
// right-hand side. basis_[r] is the basic column of row r.
class Tableau {
public:
    Tableau(std::vector<RatVec> rows, std::vector<std::size_t> basis, std::size_t cols)
        : rows_(std::move(rows)), basis_(std::move(basis)), cols_(cols)
    {
    }

    // Minimizes cost over the columns allowed by `usable`. Returns false if
    // unbounded.
    bool optimize(const RatVec& cost, const std::vector<bool>& usable)
    {
        for (;;) {
            // Reduced costs: c_j - c_B B^-1 A_j, read off the tableau.
            std::optional<std::size_t> entering;
            for (std::size_t j = 0; j < cols_ && !entering; ++j) {
                if (!usable[j] || is_basic(j))
                    continue;
                Rat rc = cost[j];
                for (std::size_t r = 0; r < rows_.size(); ++r)
                    if (!rows_[r][j].is_zero())
                        rc -= cost[basis_[r]] * rows_[r][j];
                if (rc.sign() < 0)
                    entering = j;
            }
            if (!entering)
                return true;
            const std::size_t e = *entering;

            std::optional<std::size_t> leave;
            Rat best;
            for (std::size_t r = 0; r < rows_.size(); ++r) {
                if (rows_[r][e].sign() <= 0)
                    continue;
                Rat ratio = rows_[r][cols_] / rows_[r][e];
                if (!leave || ratio < best || (ratio == best && basis_[r] < basis_[*leave])) {
                    leave = r;
                    best = ratio;
                }
            }
            if (!leave)
                return false;
            pivot(*leave, e);
        }
    }

    void pivot(std::size_t r, std::size_t c)
    {
        Rat inv = rows_[r][c].inverse();
        for (auto& x : rows_[r])
            x *= inv;
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            if (k == r || rows_[k][c].is_zero())
                continue;
            Rat f = rows_[k][c];
            for (std::size_t j = 0; j <= cols_; ++j)
                if (!rows_[r][j].is_zero())
                    rows_[k][j] -= f * rows_[r][j];
        }
        basis_[r] = c;
    }

    bool is_basic(std::size_t j) const
    {
        for (auto b : basis_)
            if (b == j)
                return true;
        return false;
    }

    Rat value(const RatVec& cost) const
    {
        Rat v = 0;
        for (std::size_t r = 0; r < rows_.size(); ++r)
            v += cost[basis_[r]] * rows_[r][cols_];
        return v;
    }

    RatVec point() const
    {
        RatVec x(cols_, Rat(0));
        for (std::size_t r = 0; r < rows_.size(); ++r)
            x[basis_[r]] = rows_[r][cols_];
        return x;
    }

    // Drives artificial columns (index >= first_artificial) out of the basis
    // where possible; rows where that is impossible are redundant and removed.
    void purge_artificials(std::size_t first_artificial)
    {
        for (std::size_t r = 0; r < rows_.size();) {
            if (basis_[r] < first_artificial) {
                ++r;
                continue;
            }
            std::optional<std::size_t> col;
            for (std::size_t j = 0; j < first_artificial && !col; ++j)
                if (!rows_[r][j].is_zero() && !is_basic(j))
                    col = j;
            if (col) {
                pivot(r, *col);
                ++r;
            } else {
                rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(r));
                basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
            }
        }
    }

private:
    std::vector<RatVec> rows_;
    std::vector<std::size_t> basis_;
    std::size_t cols_;
};

} // namespace

Solution minimize(const Problem& problem)
{
    const std::size_t n = problem.num_vars;
    if (problem.objective.size() != n)
        throw InvalidInput("objective size does not match the number of variables");

    // Column layout: structural | slack/surplus | artificial.
    std::size_t slack_count = 0;
    for (const auto& c : problem.rows) {
        if (c.coeffs.size() != n)
            throw InvalidInput("constraint size does not match the number of variables");
        if (c.rel != Relation::equal)
            ++slack_count;
    }
    const std::size_t m = problem.rows.size();
    const std::size_t first_art = n + slack_count;
    const std::size_t cols = first_art + m;

    std::vector<RatVec> rows;
    std::vector<std::size_t> basis;
    std::size_t slack = n;
    for (std::size_t r = 0; r < m; ++r) {
        const auto& c = problem.rows[r];
        RatVec row(cols + 1, Rat(0));
        bool flip = c.rhs.sign() < 0;
        Rat s = flip ? Rat(-1) : Rat(1);
        for (std::size_t j = 0; j < n; ++j)
            row[j] = s * c.coeffs[j];
        if (c.rel == Relation::less_equal)
            row[slack++] = s;
        else if (c.rel == Relation::greater_equal)
            row[slack++] = -s;
        row[first_art + r] = 1;
        row[cols] = s * c.rhs;
        rows.push_back(std::move(row));
        basis.push_back(first_art + r);
    }

    Tableau t(std::move(rows), std::move(basis), cols);

    RatVec phase1(cols, Rat(0));
    for (std::size_t j = first_art; j < cols; ++j)
        phase1[j] = 1;
    t.optimize(phase1, std::vector<bool>(cols, true));
    Solution sol;
    if (t.value(phase1).sign() > 0) {
        sol.status = Status::infeasible;
        return sol;
    }
    t.purge_artificials(first_art);

    RatVec phase2(cols, Rat(0));
    for (std::size_t j = 0; j < n; ++j)
        phase2[j] = problem.objective[j];
    std::vector<bool> usable(cols, true);
    for (std::size_t j = first_art; j < cols; ++j)
        usable[j] = false;
    bool bounded = t.optimize(phase2, usable);

    RatVec full = t.point();
    sol.x.assign(full.begin(), full.begin() + static_cast<std::ptrdiff_t>(n));
    sol.status = bounded ? Status::optimal : Status::unbounded;
    if (bounded)
        sol.value = t.value(phase2);
    return sol;
}

} // namespace lojex::lp
