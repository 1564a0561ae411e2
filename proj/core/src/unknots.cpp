#include "lenscontact/unknots.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace lenscontact {

Knot underlying(OrientedKnot k) {
  return (k == OrientedKnot::kK1 || k == OrientedKnot::kMinusK1) ? Knot::kK1 : Knot::kK2;
}

bool is_reversed(OrientedKnot k) {
  return k == OrientedKnot::kMinusK1 || k == OrientedKnot::kMinusK2;
}

std::string to_string(OrientedKnot k) {
  switch (k) {
    case OrientedKnot::kK1: return "K1";
    case OrientedKnot::kMinusK1: return "-K1";
    case OrientedKnot::kK2: return "K2";
    case OrientedKnot::kMinusK2: return "-K2";
  }
  return "?";
}

OrientedKnot parse_oriented_knot(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "k1") return OrientedKnot::kK1;
  if (lower == "-k1") return OrientedKnot::kMinusK1;
  if (lower == "k2") return OrientedKnot::kK2;
  if (lower == "-k2") return OrientedKnot::kMinusK2;
  throw std::invalid_argument("unknown knot '" + std::string(text) + "' (expected k1, -k1, k2, -k2)");
}

Rational tb_q_peak(const LensSpace& lens, Knot knot) {
  const Integer& p = lens.p();
  if (knot == Knot::kK1) return -Rational(p - lens.q(), p);
  const Integer p_prime = dual_fraction(p, lens.q()).num();
  return -Rational(p - p_prime, p);
}

Rational rot_q_farey(const DecoratedPath& dp, Knot knot) {
  const auto& v = dp.path.vertices;
  if (v.size() < 3 || dp.signs.size() != v.size() - 3) {
    throw std::invalid_argument("decorated path has inconsistent sign count");
  }
  // s_0 = -p/q in lowest terms.
  const Integer p = -v.front().num();
  const Integer q = v.front().den();
  if (p <= 0) throw std::domain_error("decorated path must start at a negative slope");
  Integer sum = 0;
  for (std::size_t k = 0; k < dp.signs.size(); ++k) {
    const ExtRat& from = v[k + 1];
    const ExtRat& to = v[k + 2];
    if (from.num() >= 0 || to.num() >= 0 || from.is_infinite() || to.is_infinite()) {
      throw std::domain_error("decorated vertex " + (from.num() >= 0 ? from : to).str() +
                              " cannot be written with a negative numerator");
    }
    Integer term;
    if (knot == Knot::kK1) {
      // (s_i - s_{i+1}) . (-p/q), differenced on raw numerators/denominators.
      const Integer dn = from.num() - to.num();
      const Integer dd = from.den() - to.den();
      term = dn * q - dd * (-p);
    } else {
      // (s_{i+1} - s_i) . (0/1)
      term = to.num() - from.num();
    }
    if (dp.signs[k] == '-') term = -term;
    sum += term;
  }
  return Rational(sum, p);
}

Rational sl_q(const Rational& tb_q, const Rational& rot_q) { return tb_q - rot_q; }

LegendrianClass stabilize(const LegendrianClass& c, StabilizationSign sign) {
  LegendrianClass out = c;
  out.tb_q -= 1;
  out.rot_q += sign == StabilizationSign::kPositive ? 1 : -1;
  return out;
}

std::vector<OrientedKnot> peak_knots(const LensSpace& lens) {
  if (lens.p() == 2) return {OrientedKnot::kK1};
  if (lens.q_is_one() || lens.q_is_minus_one()) return {OrientedKnot::kK1, OrientedKnot::kMinusK1};
  return {OrientedKnot::kK1, OrientedKnot::kMinusK1, OrientedKnot::kK2, OrientedKnot::kMinusK2};
}

namespace {

MountainPoint peak_point(const LensSpace& lens, const ShuffleClass& ts, OrientedKnot knot) {
  const Knot base = underlying(knot);
  Rational rot = rot_q_farey(ts.representative, base);
  if (is_reversed(knot)) rot = -rot;
  return {rot, tb_q_peak(lens, base)};
}

}  // namespace

std::vector<LegendrianClass> legendrian_classification(const LensSpace& lens,
                                                       const ShuffleClass& ts) {
  std::vector<LegendrianClass> peaks;
  for (OrientedKnot k : peak_knots(lens)) {
    const MountainPoint pt = peak_point(lens, ts, k);
    peaks.push_back({k, pt.tb_q, pt.rot_q, ts.signs()});
  }
  return peaks;
}

std::vector<TransversePeak> transverse_classification(const LensSpace& lens,
                                                      const ShuffleClass& ts) {
  std::vector<TransversePeak> peaks;
  for (const LegendrianClass& c : legendrian_classification(lens, ts)) {
    peaks.push_back({c.knot, sl_q(c.tb_q, c.rot_q)});
  }
  return peaks;
}

Rational stabilize_transverse(const Rational& sl) { return sl - 2; }

MountainRange mountain_range(const LensSpace& lens, const ShuffleClass& ts, OrientedKnot knot,
                             int depth) {
  if (depth < 0) throw std::invalid_argument("mountain range depth must be non-negative");
  MountainRange range;
  range.knot = knot;
  range.peak = peak_point(lens, ts, knot);
  range.depth = depth;
  for (int k = 0; k <= depth; ++k) {
    for (int r = -k; r <= k; r += 2) {
      range.dots.push_back({range.peak.rot_q + r, range.peak.tb_q - k});
    }
  }
  range.identified_with = smooth_identifications(lens, knot);
  return range;
}

std::vector<OrientedKnot> smooth_identifications(const LensSpace& lens, OrientedKnot knot) {
  using K = OrientedKnot;
  const std::vector<K> all{K::kK1, K::kMinusK1, K::kK2, K::kMinusK2};
  std::vector<K> result;
  if (lens.p() == 2) {
    for (K k : all) {
      if (k != knot) result.push_back(k);
    }
    return result;
  }
  // q = -1: K1 ~ -K2. q = 1: K1 ~ K2. Orientation reversal is never smooth
  // for p > 2.
  auto partner = [&](K k) -> K {
    const bool flip = lens.q_is_minus_one();
    switch (k) {
      case K::kK1: return flip ? K::kMinusK2 : K::kK2;
      case K::kMinusK1: return flip ? K::kK2 : K::kMinusK2;
      case K::kK2: return flip ? K::kMinusK1 : K::kK1;
      case K::kMinusK2: return flip ? K::kK1 : K::kMinusK1;
    }
    return k;
  };
  if (lens.q_is_minus_one() || lens.q_is_one()) result.push_back(partner(knot));
  return result;
}

}  // namespace lenscontact
