#pragma once

// Chain surgery presentations of the rational unknots K1, K2 in L(p,q) and
// the linking-matrix formula for their rational rotation numbers.
//
// A chain with framings [r_0, ..., r_n] (each <= -2) is realized by
// Legendrian unknots with tb = r_i + 1 and contact (-1)-surgery; the smooth
// framing is r_i. The Legendrian meridian L has tb = -1 and rot = 0 before
// stabilization and links exactly one chain component once.

#include "lenscontact/lens_space.hpp"
#include "lenscontact/linalg.hpp"

#include <vector>

namespace lenscontact {

enum class Knot { kK1, kK2 };

enum class MeridianOf { kFirst, kLast };

struct SurgeryChain {
  std::vector<Integer> framings;
  std::vector<Integer> rotations;  // empty until a stabilization choice is made
  MeridianOf meridian_of = MeridianOf::kFirst;
};

/// Framings are the lens-form expansion of -p/q for both knots; K1 hangs
/// off the first component and K2 off the last.
SurgeryChain build_chain(const LensSpace& lens, Knot knot);

/// Tridiagonal linking matrix: framings on the diagonal, 1 off it.
IntMatrix linking_matrix(const SurgeryChain& chain);

/// Rotation numbers of a Legendrian unknot with tb = framing + 1:
/// {framing + 2, framing + 4, ..., -(framing + 2)}.
std::vector<Integer> admissible_rotations(const Integer& framing);

/// Cartesian product of admissible rotations, first component varying
/// slowest. Size equals the number of tight structures on L(p,q).
std::vector<std::vector<Integer>> rot_choices(const SurgeryChain& chain);

struct LinkingData {
  IntMatrix m;
  std::vector<Integer> rot;
  std::vector<Integer> lk;
  Integer rot0 = 0;
};

/// Linking data for the meridian knot of `chain` with rotation vector `rot`.
LinkingData linking_data(const SurgeryChain& chain, const std::vector<Integer>& rot);

/// rot0 - rot^T M^{-1} lk, by an exact solve of M x = lk.
/// Throws SingularMatrixError when det M = 0.
Rational rot_q_surgery(const LinkingData& data);

/// rot_Q over every stabilization choice, sorted ascending.
std::vector<Rational> rot_spectrum(const LensSpace& lens, Knot knot);

}  // namespace lenscontact
