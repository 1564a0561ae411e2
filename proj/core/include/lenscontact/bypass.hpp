#pragma once

// Slope calculus for bypass attachments on convex tori.

#include "lenscontact/farey_graph.hpp"

#include <vector>

namespace lenscontact {

enum class BypassSide { kFront, kBack };

/// Convex torus summary: dividing slope and the (even) number of dividing
/// curves.
struct TorusState {
  ExtRat dividing_slope;
  int num_dividing = 2;

  friend bool operator==(const TorusState&, const TorusState&) = default;
};

/// Throws std::invalid_argument unless num_dividing is even and >= 2.
void validate(const TorusState& state);

/// Dividing slope after attaching a bypass along a ruling curve of slope
/// `ruling`. Front attachments move clockwise toward the ruling slope, back
/// attachments counterclockwise. Only two dividing curves are supported;
/// larger counts throw std::domain_error.
TorusState attach_bypass(const TorusState& state, const ExtRat& ruling, BypassSide side);

/// tb of a Legendrian boundary meeting the dividing set `intersections`
/// times: -intersections / 2. Throws std::invalid_argument on odd or
/// non-positive input.
long long tb_from_dividing(long long intersections);

/// Repeated front bypasses with ruling slope `to`, starting from slope
/// `from`. The visited slopes form the basic-slice decomposition of the
/// layer between the two slopes.
std::vector<TorusState> basic_slice_walk(const ExtRat& from, const ExtRat& to);

}  // namespace lenscontact
