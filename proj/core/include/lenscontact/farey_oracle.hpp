#pragma once

// Breadth-first search over an explicit, bounded piece of the Farey graph.
// This is a verification oracle for geodesic(); it shares no code with the
// greedy construction and works on machine integers.

#include "lenscontact/farey_graph.hpp"

#include <cstdint>

namespace lenscontact {

struct OracleResult {
  FareyPath path;
  // Number of distinct shortest paths inside the arc (saturating).
  std::uint64_t shortest_path_count = 0;
};

/// Shortest edge path from `from` to `to` through vertices in the open
/// clockwise arc between them whose denominators are at most den_bound.
/// Numerators are bounded by den_bound * (max |endpoint numerator| + 1).
/// Ties between equal-length paths are broken deterministically.
/// Throws std::domain_error when `to` is unreachable (bound too small) and
/// std::out_of_range when endpoints exceed 64-bit range.
OracleResult bfs_oracle(const ExtRat& from, const ExtRat& to, int den_bound);

}  // namespace lenscontact
