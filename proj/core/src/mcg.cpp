#include "lenscontact/mcg.hpp"

#include <stdexcept>

namespace lenscontact {
namespace {

GroupDescription trivial() { return {GroupTag::kTrivial, {}, {}}; }
GroupDescription z2(Generator g, std::string note = {}) { return {GroupTag::kZ2, {g}, std::move(note)}; }
GroupDescription sigma_tau() { return {GroupTag::kZ2xZ2, {Generator::kSigma, Generator::kTau}, {}}; }

}  // namespace

std::optional<int> order(const GroupDescription& g) {
  switch (g.tag) {
    case GroupTag::kTrivial: return 1;
    case GroupTag::kZ2: return 2;
    case GroupTag::kZ2xZ2: return 4;
    case GroupTag::kZxZ2: return std::nullopt;
  }
  return std::nullopt;
}

void validate(const GroupDescription& g) {
  std::size_t expected = 0;
  switch (g.tag) {
    case GroupTag::kTrivial: expected = 0; break;
    case GroupTag::kZ2: expected = 1; break;
    case GroupTag::kZ2xZ2:
    case GroupTag::kZxZ2: expected = 2; break;
  }
  if (g.generators.size() != expected) {
    throw std::logic_error("group " + to_string(g.tag) + " listed with wrong generator count");
  }
}

std::string to_string(GroupTag tag) {
  switch (tag) {
    case GroupTag::kTrivial: return "trivial";
    case GroupTag::kZ2: return "Z2";
    case GroupTag::kZ2xZ2: return "Z2xZ2";
    case GroupTag::kZxZ2: return "ZxZ2";
  }
  return "?";
}

std::string to_string(Generator g) {
  switch (g) {
    case Generator::kSigma: return "sigma";
    case Generator::kTau: return "tau";
    case Generator::kSigmaTau: return "sigma*tau";
    case Generator::kDelta: return "delta";
    case Generator::kEta: return "eta";
  }
  return "?";
}

std::string to_string(const GroupDescription& g) {
  std::string out = to_string(g.tag) + " [";
  for (std::size_t i = 0; i < g.generators.size(); ++i) {
    if (i) out += ", ";
    out += to_string(g.generators[i]);
  }
  out += "]";
  if (!g.note.empty()) out += " (" + g.note + ")";
  return out;
}

// p = 2 is tested first everywhere: there 1 = -1 (mod 2).

GroupDescription smooth_mcg(const LensSpace& lens) {
  if (lens.p() == 2) return trivial();
  if (lens.q_is_minus_one()) return z2(Generator::kSigma, "sigma = tau");
  if (lens.q_is_one()) return z2(Generator::kTau);
  if (lens.q_squared_is_one()) return sigma_tau();
  return z2(Generator::kTau);
}

ContactMcg contact_mcg(const LensSpace& lens) {
  ContactMcg result;
  const bool minus_one = lens.p() != 2 && lens.q_is_minus_one();
  const bool exotic_square = !lens.q_is_one() && !lens.q_is_minus_one() && lens.q_squared_is_one();
  result.group = (minus_one || exotic_square) ? z2(Generator::kSigma) : trivial();
  return result;
}

GroupDescription contact_mcg_rel_torus(const LensSpace& lens) {
  return lens.q_squared_is_one() ? sigma_tau() : z2(Generator::kTau);
}

GroupDescription inclusion_kernel(const LensSpace& lens) {
  if (lens.p() == 2) return sigma_tau();
  if (lens.q_is_minus_one()) return z2(Generator::kSigmaTau);
  if (lens.q_is_one()) return z2(Generator::kSigma);
  return trivial();
}

bool inclusion_is_iso(const LensSpace& lens) { return lens.q_is_minus_one(); }

std::vector<OrientedKnot> unknot_classes(const LensSpace& lens) {
  using K = OrientedKnot;
  if (lens.p() == 2) return {K::kK1};
  if (lens.q_is_one() || lens.q_is_minus_one()) return {K::kK1, K::kMinusK1};
  return {K::kK1, K::kMinusK1, K::kK2, K::kMinusK2};
}

GroupDescription contact_mcg_s1s2() {
  return {GroupTag::kZxZ2, {Generator::kDelta, Generator::kEta}, {}};
}

Integer delta_action(CoreOrientation orientation, const Integer& rot) {
  return orientation == CoreOrientation::kPositive ? Integer(rot + 1) : Integer(rot - 1);
}

Integer eta_action(const Integer& rot) { return -rot; }

}  // namespace lenscontact
