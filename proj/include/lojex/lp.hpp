#pragma once

#include "lojex/rat.hpp"

#include <vector>

namespace lojex::lp {

enum class Relation { less_equal, equal, greater_equal };
enum class Status { optimal, infeasible, unbounded };

struct Constraint {
    RatVec coeffs;
    Relation rel;
    Rat rhs;
};

// minimize <objective, x> subject to rows, x >= 0.
struct Problem {
    std::size_t num_vars = 0;
    RatVec objective;
    std::vector<Constraint> rows;
};

struct Solution {
    Status status = Status::infeasible;
    Rat value;
    RatVec x; // a basic optimal (or feasible) point when status != infeasible
};

// Exact two-phase primal simplex with Bland's rule.
Solution minimize(const Problem& problem);

} // namespace lojex::lp
