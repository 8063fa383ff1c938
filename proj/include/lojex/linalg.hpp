#pragma once

#include "lojex/rat.hpp"

#include <optional>
#include <vector>

namespace lojex {

using RatMatrix = std::vector<RatVec>;

// Reduced row echelon form in place; returns the pivot column of each
// nonzero row.
std::vector<std::size_t> row_reduce(RatMatrix& m, std::size_t cols);

std::size_t integer_rank(const std::vector<std::vector<Int>>& rows, std::size_t cols);

// Primitive integer generator of the kernel of `rows` (cols columns).
// Throws InternalError unless the kernel is one-dimensional.
std::vector<Int> integer_kernel_vector(const std::vector<std::vector<Int>>& rows, std::size_t cols);

// Unique solution of the square system a x = b, or nullopt if singular.
std::optional<RatVec> solve(RatMatrix a, RatVec b);

} // namespace lojex
