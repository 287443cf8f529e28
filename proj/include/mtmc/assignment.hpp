#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "mtmc/types.hpp"

namespace mtmc {

/// Rows x cols weights; entries are finite or -inf (forbidden edge).
using WeightMatrix = Matrix;

/// Matched (row, col) pairs in ascending order.
using Matching = std::vector<std::pair<std::size_t, std::size_t>>;

/// Maximum-weight bipartite matching (Kuhn-Munkres).
///
/// Any row or column may stay unmatched, so edges with negative weight are
/// never part of the result and -inf edges are forbidden. Among matchings of
/// equal total weight the lexicographically smallest sorted pair list is
/// returned. Throws ValidationError on +inf or NaN entries.
Matching solve_max_weight_matching(const WeightMatrix& weights);

/// Sum of matched weights, accumulated in pair order.
double matching_weight(const WeightMatrix& weights, const Matching& matching);

}  // namespace mtmc
