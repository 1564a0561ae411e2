#pragma once

// Classical rational invariants of Legendrian and transverse rational
// unknots in tight lens spaces, and their mountain ranges.

#include "lenscontact/surgery.hpp"
#include "lenscontact/tight_structures.hpp"

#include <string>
#include <vector>

namespace lenscontact {

enum class OrientedKnot { kK1, kMinusK1, kK2, kMinusK2 };

Knot underlying(OrientedKnot k);
bool is_reversed(OrientedKnot k);
std::string to_string(OrientedKnot k);  // "K1", "-K1", "K2", "-K2"
// Accepts k1, -k1, k2, -k2 (case-insensitive). Throws std::invalid_argument.
OrientedKnot parse_oriented_knot(std::string_view text);

enum class StabilizationSign { kPositive, kNegative };

/// Maximal tb_Q: -(p - q)/p for K1 and -(p - p')/p for K2.
Rational tb_q_peak(const LensSpace& lens, Knot knot);

/// rot_Q of the peak of K1 or K2 from the signed Farey sums over decorated
/// edges. Vertex pairs are differenced unreduced, with negative numerators
/// and positive denominators. Throws std::domain_error if a decorated
/// vertex has a non-negative numerator.
Rational rot_q_farey(const DecoratedPath& path, Knot knot);

/// tb_Q - rot_Q.
Rational sl_q(const Rational& tb_q, const Rational& rot_q);

struct LegendrianClass {
  OrientedKnot knot = OrientedKnot::kK1;
  Rational tb_q;
  Rational rot_q;
  std::string structure;  // normal-form sign string of the tight structure
};

/// tb_Q - 1 and rot_Q +/- 1.
LegendrianClass stabilize(const LegendrianClass& c, StabilizationSign sign);

/// Oriented knots whose peaks are listed for L(p,q): {K1} for p = 2,
/// {K1, -K1} when q = +/-1 (mod p), all four otherwise.
std::vector<OrientedKnot> peak_knots(const LensSpace& lens);

/// Peak Legendrian representatives in the tight structure `ts`.
std::vector<LegendrianClass> legendrian_classification(const LensSpace& lens,
                                                       const ShuffleClass& ts);

struct TransversePeak {
  OrientedKnot knot = OrientedKnot::kK1;
  Rational sl_q;
};

/// Positive transverse push-offs of the Legendrian peaks.
std::vector<TransversePeak> transverse_classification(const LensSpace& lens,
                                                      const ShuffleClass& ts);

/// Transverse stabilization lowers sl_Q by 2.
Rational stabilize_transverse(const Rational& sl);

struct MountainPoint {
  Rational rot_q;
  Rational tb_q;

  friend bool operator==(const MountainPoint&, const MountainPoint&) = default;
};

struct MountainRange {
  OrientedKnot knot = OrientedKnot::kK1;
  MountainPoint peak;
  int depth = 0;
  // Row k (tb = peak.tb - k) has rot in {peak.rot - k, ..., peak.rot + k}
  // step 2; rows top-down, rot ascending.
  std::vector<MountainPoint> dots;
  // Oriented knots smoothly isotopic to `knot` (excluding itself).
  std::vector<OrientedKnot> identified_with;
};

/// Throws std::invalid_argument for a negative depth.
MountainRange mountain_range(const LensSpace& lens, const ShuffleClass& ts, OrientedKnot knot,
                             int depth);

/// Oriented rational unknots smoothly isotopic to `knot`, other than itself.
std::vector<OrientedKnot> smooth_identifications(const LensSpace& lens, OrientedKnot knot);

}  // namespace lenscontact
