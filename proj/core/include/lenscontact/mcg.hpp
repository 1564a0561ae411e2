#pragma once

// Smooth and contact mapping class groups of lens spaces and S^1 x S^2,
// returned as a group tag plus named generators.
//
//   sigma: (z1, z2) -> (z2, z1), defined when q^2 = 1 (mod p)
//   tau:   (z1, z2) -> (conj z1, conj z2)
//   delta: Dehn twist along the essential sphere of S^1 x S^2
//   eta:   (theta, x) -> (-theta, -x) on S^1 x S^2

#include "lenscontact/lens_space.hpp"
#include "lenscontact/unknots.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lenscontact {

enum class GroupTag { kTrivial, kZ2, kZ2xZ2, kZxZ2 };

enum class Generator { kSigma, kTau, kSigmaTau, kDelta, kEta };

struct GroupDescription {
  GroupTag tag = GroupTag::kTrivial;
  std::vector<Generator> generators;
  // Extra relation, e.g. "sigma = tau" when both generate the same Z2.
  std::string note;

  friend bool operator==(const GroupDescription&, const GroupDescription&) = default;
};

/// Group order, or nullopt for the infinite group Z + Z2.
std::optional<int> order(const GroupDescription& g);

/// Throws std::logic_error when the generator count does not fit the tag.
void validate(const GroupDescription& g);

std::string to_string(GroupTag tag);
std::string to_string(Generator g);
/// "Z2 [sigma]", "trivial []", "Z2xZ2 [sigma, tau]", ...
std::string to_string(const GroupDescription& g);

/// pi_0 Diff_+(L(p,q)).
GroupDescription smooth_mcg(const LensSpace& lens);

struct ContactMcg {
  GroupDescription group;
  // pi_0 of contactomorphisms smoothly isotopic to the identity is trivial
  // for every lens space.
  bool identity_component_trivial = true;
};

/// pi_0 Cont(L(p,q), xi_std). Same answer for either standard structure.
ContactMcg contact_mcg(const LensSpace& lens);

/// pi_0 Diff_+(L(p,q); T) for a Heegaard torus T.
GroupDescription contact_mcg_rel_torus(const LensSpace& lens);

/// Kernel of pi_0 Diff_+(L(p,q); T) -> pi_0 Diff_+(L(p,q)).
GroupDescription inclusion_kernel(const LensSpace& lens);

/// Whether pi_0 Cont -> pi_0 Diff_+ is an isomorphism: q = -1 (mod p).
bool inclusion_is_iso(const LensSpace& lens);

/// Oriented rational unknots up to smooth isotopy.
std::vector<OrientedKnot> unknot_classes(const LensSpace& lens);

/// pi_0 Cont(S^1 x S^2, xi_std) = Z + Z2 generated by delta and eta.
GroupDescription contact_mcg_s1s2();

enum class CoreOrientation { kPositive, kNegative };

/// rot(delta(+-L)) = rot(+-L) +- 1.
Integer delta_action(CoreOrientation orientation, const Integer& rot);
/// rot(eta(L)) = -rot(L).
Integer eta_action(const Integer& rot);

}  // namespace lenscontact
