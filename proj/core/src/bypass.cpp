#include "lenscontact/bypass.hpp"

#include <stdexcept>
#include <string>

namespace lenscontact {

void validate(const TorusState& state) {
  if (state.num_dividing < 2 || state.num_dividing % 2 != 0) {
    throw std::invalid_argument("a convex torus needs an even, positive number of dividing curves, got " +
                                std::to_string(state.num_dividing));
  }
}

TorusState attach_bypass(const TorusState& state, const ExtRat& ruling, BypassSide side) {
  validate(state);
  if (state.num_dividing != 2) {
    throw std::domain_error("bypass slope calculus is only defined for two dividing curves");
  }
  if (state.dividing_slope == ruling) {
    throw std::domain_error("ruling slope must differ from the dividing slope");
  }
  const Rotation direction = side == BypassSide::kFront ? Rotation::kClockwise : Rotation::kCounterclockwise;
  return {farthest_neighbor(state.dividing_slope, ruling, direction), 2};
}

long long tb_from_dividing(long long intersections) {
  if (intersections <= 0 || intersections % 2 != 0) {
    throw std::invalid_argument("dividing-set intersection count must be even and positive");
  }
  return -intersections / 2;
}

std::vector<TorusState> basic_slice_walk(const ExtRat& from, const ExtRat& to) {
  if (from == to) throw std::domain_error("basic_slice_walk: endpoints coincide");
  std::vector<TorusState> walk{{from, 2}};
  while (!(walk.back().dividing_slope == to)) {
    walk.push_back(attach_bypass(walk.back(), to, BypassSide::kFront));
  }
  return walk;
}

}  // namespace lenscontact
