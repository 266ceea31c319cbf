#pragma once

#include "dsrg/matrix.hpp"
#include "dsrg/params.hpp"

#include <vector>

namespace dsrg {

/// Exhaustive search for every labeled DSRG with the given parameters, by
/// row-by-row backtracking in lexicographic row order. Pruning: exact row
/// sums, column-sum bounds, and partial 2-path counts against their caps.
/// Independent of the GA machinery; intended as a test oracle for tiny v.
/// Throws if params.v > vertex_cap.
std::vector<Matrix> brute_force_enumerate(const Params& params, int vertex_cap = 8);

}  // namespace dsrg
