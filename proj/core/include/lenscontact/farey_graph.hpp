#pragma once

// The Farey graph on the boundary circle of the Poincare disk.
//
// Orientation: 0 sits at the top, infinity at the bottom, positive slopes on
// the right. Clockwise therefore runs 0 -> 1 -> inf -> -1 -> 0, which is the
// real order with a wrap through infinity. Every "clockwise of" phrase in the
// library resolves through in_arc().

#include "lenscontact/rational.hpp"

#include <cstddef>
#include <vector>

namespace lenscontact {

enum class Rotation { kClockwise, kCounterclockwise };

struct FareyPath {
  std::vector<ExtRat> vertices;

  std::size_t edge_count() const { return vertices.empty() ? 0 : vertices.size() - 1; }
  friend bool operator==(const FareyPath&, const FareyPath&) = default;
};

/// True iff x lies in the open arc swept clockwise from `from` to `to`.
/// Throws std::domain_error when from == to.
bool in_arc(const ExtRat& x, const ExtRat& from, const ExtRat& to);

bool is_farey_edge(const ExtRat& a, const ExtRat& b);

/// The Farey neighbor of s farthest from s inside the arc (s, bound] swept in
/// the given direction; returns bound itself when s and bound share an edge.
/// Closed form from the pencil of neighbors v0 + k*s, O(log) via extended
/// Euclid. Throws std::domain_error when s == bound.
ExtRat farthest_neighbor(const ExtRat& s, const ExtRat& bound,
                         Rotation direction = Rotation::kClockwise);

/// Greedy geodesic from `from` to `to` inside the arc swept clockwise.
FareyPath geodesic(const ExtRat& from, const ExtRat& to);

}  // namespace lenscontact
