#include "lenscontact/surgery.hpp"

#include <algorithm>
#include <stdexcept>

namespace lenscontact {

SurgeryChain build_chain(const LensSpace& lens, Knot knot) {
  SurgeryChain chain;
  chain.framings = neg_cf(lens.meridian_slope(), CfForm::kLens).coeffs;
  chain.meridian_of = knot == Knot::kK1 ? MeridianOf::kFirst : MeridianOf::kLast;
  return chain;
}

IntMatrix linking_matrix(const SurgeryChain& chain) {
  const std::size_t n = chain.framings.size();
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = chain.framings[i];
    if (i + 1 < n) {
      m(i, i + 1) = 1;
      m(i + 1, i) = 1;
    }
  }
  return m;
}

std::vector<Integer> admissible_rotations(const Integer& framing) {
  if (framing > -2) throw std::domain_error("chain framings must be <= -2");
  std::vector<Integer> rots;
  for (Integer r = framing + 2; r <= -(framing + 2); r += 2) rots.push_back(r);
  return rots;
}

std::vector<std::vector<Integer>> rot_choices(const SurgeryChain& chain) {
  std::vector<std::vector<Integer>> result{{}};
  for (const Integer& framing : chain.framings) {
    const std::vector<Integer> options = admissible_rotations(framing);
    std::vector<std::vector<Integer>> next;
    next.reserve(result.size() * options.size());
    for (const auto& prefix : result) {
      for (const Integer& r : options) {
        next.push_back(prefix);
        next.back().push_back(r);
      }
    }
    result = std::move(next);
  }
  return result;
}

LinkingData linking_data(const SurgeryChain& chain, const std::vector<Integer>& rot) {
  if (rot.size() != chain.framings.size()) {
    throw std::invalid_argument("rotation vector length must match the chain");
  }
  LinkingData data;
  data.m = linking_matrix(chain);
  data.rot = rot;
  data.lk.assign(chain.framings.size(), 0);
  if (!data.lk.empty()) {
    data.lk[chain.meridian_of == MeridianOf::kFirst ? 0 : data.lk.size() - 1] = 1;
  }
  data.rot0 = 0;
  return data;
}

Rational rot_q_surgery(const LinkingData& data) {
  const std::vector<Rational> x = solve_exact(data.m, data.lk);
  Rational result = data.rot0;
  for (std::size_t i = 0; i < x.size(); ++i) result -= data.rot[i] * x[i];
  return result;
}

std::vector<Rational> rot_spectrum(const LensSpace& lens, Knot knot) {
  const SurgeryChain chain = build_chain(lens, knot);
  const LinkingData base = linking_data(chain, std::vector<Integer>(chain.framings.size(), 0));
  // M^{-1} lk is shared by every stabilization choice.
  const std::vector<Rational> x = solve_exact(base.m, base.lk);
  std::vector<Rational> spectrum;
  for (const auto& rot : rot_choices(chain)) {
    Rational value = base.rot0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (rot[i] != 0) value -= rot[i] * x[i];
    }
    spectrum.push_back(std::move(value));
  }
  std::sort(spectrum.begin(), spectrum.end());
  return spectrum;
}

}  // namespace lenscontact
