#pragma once

#include <map>
#include <optional>
#include <vector>

#include "cohft/algebra/rational.hpp"

namespace cohft::algebra {

using SparseRow = std::map<std::size_t, BigRational>;

struct LinearSolution {
  std::vector<BigRational> values;  // free unknowns set to zero
  std::size_t kernel_dimension = 0;
};

/// Exact sparse Gaussian elimination for sum_j rows[r][j] x_j = rhs[r].
/// Returns nullopt if the system is inconsistent.
std::optional<LinearSolution> solve_linear(const std::vector<SparseRow>& rows, const std::vector<BigRational>& rhs,
                                           std::size_t unknowns);

}  // namespace cohft::algebra
