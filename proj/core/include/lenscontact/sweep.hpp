#pragma once

// Cross-validation sweep over every lens space L(p,q) with p <= p_max.
// Each check family compares two independent computations; a failure keeps
// the first counterexample in (p, q, class index) order.

#include "lenscontact/surgery.hpp"
#include "lenscontact/tight_structures.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace lenscontact {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::optional<std::string> counterexample;
};

struct SweepReport {
  int p_max = 0;
  std::vector<CheckResult> checks;
  double runtime_seconds = 0.0;

  bool passed() const;
};

/// Replaceable implementation hooks, used to prove the sweep catches
/// injected faults.
struct SweepHooks {
  std::function<Rational(const DecoratedPath&, Knot)> rot_q_farey;
};

/// Families, in order: tight_count, universal_tight, geodesic_bfs,
/// rot_q_dual, linking_det, mcg_consistency. Throws std::invalid_argument
/// for p_max < 2.
SweepReport check_sweep(int p_max, const SweepHooks& hooks = {});

}  // namespace lenscontact
