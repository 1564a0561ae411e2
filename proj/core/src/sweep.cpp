#include "lenscontact/sweep.hpp"

#include "lenscontact/farey_oracle.hpp"
#include "lenscontact/mcg.hpp"
#include "lenscontact/unknots.hpp"

#include <boost/multiprecision/integer.hpp>

#include <algorithm>
#include <chrono>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace lenscontact {
namespace {

std::string join(const std::vector<Rational>& values) {
  std::string out = "{";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += to_string(values[i]);
  }
  return out + "}";
}

std::string join(const FareyPath& path) {
  std::string out = "[";
  for (std::size_t i = 0; i < path.vertices.size(); ++i) {
    if (i) out += ", ";
    out += path.vertices[i].str();
  }
  return out + "]";
}

class Recorder {
 public:
  explicit Recorder(std::string name) { result_.name = std::move(name); }

  void expect(bool ok, const std::string& lens, const std::string& detail) {
    ++result_.cases;
    if (ok || !result_.passed) {
      if (!ok) result_.passed = false;
      return;
    }
    result_.passed = false;
    result_.counterexample = lens + ": " + detail;
  }

  CheckResult take() { return std::move(result_); }

 private:
  CheckResult result_;
};

}  // namespace

bool SweepReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

SweepReport check_sweep(int p_max, const SweepHooks& hooks) {
  if (p_max < 2) throw std::invalid_argument("check sweep needs p_max >= 2");
  const auto start = std::chrono::steady_clock::now();
  const auto farey_rot = hooks.rot_q_farey ? hooks.rot_q_farey : rot_q_farey;

  Recorder tight("tight_count"), universal("universal_tight"), geo("geodesic_bfs"),
      rot("rot_q_dual"), det("linking_det"), mcg("mcg_consistency");

  for (int p = 2; p <= p_max; ++p) {
    for (int q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const LensSpace lens(p, q);
      const std::string name = lens.str();

      // Enumeration against the continued-fraction product.
      const std::vector<ShuffleClass> classes = enumerate_tight(lens);
      const Integer formula = count_tight_lens(lens);
      tight.expect(Integer(classes.size()) == formula, name,
                   "enumerated " + std::to_string(classes.size()) + " classes, formula gives " +
                       formula.str());

      std::size_t constant_sign = 0;
      for (std::size_t i = 0; i < classes.size(); ++i) {
        if (is_universally_tight(classes[i])) ++constant_sign;
      }
      const std::size_t expected_ut = lens.q_is_minus_one() ? 1 : 2;
      universal.expect(constant_sign == expected_ut && standard_structures(lens).size() == expected_ut,
                       name,
                       std::to_string(constant_sign) + " constant-sign classes, expected " +
                           std::to_string(expected_ut));

      // Greedy geodesic against breadth-first search.
      const FareyPath path = lens_geodesic(lens);
      const OracleResult oracle = bfs_oracle(lens.meridian_slope(), ExtRat(0), p_max);
      geo.expect(path == oracle.path && oracle.shortest_path_count == 1, name,
                 "geodesic " + join(path) + " vs oracle " + join(oracle.path) + " (" +
                     std::to_string(oracle.shortest_path_count) + " shortest paths)");

      // Rotation numbers: Farey path sums against the linking matrix.
      for (Knot knot : {Knot::kK1, Knot::kK2}) {
        std::vector<Rational> farey;
        farey.reserve(classes.size());
        for (const ShuffleClass& ts : classes) farey.push_back(farey_rot(ts.representative, knot));
        std::sort(farey.begin(), farey.end());
        const std::vector<Rational> surgery = rot_spectrum(lens, knot);
        bool integral = true;
        for (const Rational& r : surgery) {
          integral = integral && boost::multiprecision::denominator(Rational(r * p)) == 1;
        }
        rot.expect(farey == surgery && integral, name + (knot == Knot::kK1 ? " K1" : " K2"),
                   "Farey " + join(farey) + " vs surgery " + join(surgery));
      }

      const IntMatrix m = linking_matrix(build_chain(lens, Knot::kK1));
      const Integer d = determinant(m);
      det.expect(m.is_symmetric() && (d == p || d == -p), name, "det M = " + d.str());

      // Mapping class tables.
      const GroupDescription smooth = smooth_mcg(lens);
      const GroupDescription contact = contact_mcg(lens).group;
      validate(smooth);
      validate(contact);
      const int smooth_order = *order(smooth);
      const int contact_order = *order(contact);
      const bool divides = smooth_order % contact_order == 0;
      const bool iso = inclusion_is_iso(lens) == (smooth_order == contact_order);
      const bool sigma_ok = contact_order == 1 || lens.q_squared_is_one();
      const std::vector<OrientedKnot> knots = unknot_classes(lens);
      const bool peaks_ok = knots == peak_knots(lens) &&
                            (knots.size() == 1 || knots.size() == 2 || knots.size() == 4);
      mcg.expect(divides && iso && sigma_ok && peaks_ok, name,
                 "contact " + to_string(contact) + ", smooth " + to_string(smooth) + ", " +
                     std::to_string(knots.size()) + " unknot classes");
    }
  }

  SweepReport report;
  report.p_max = p_max;
  for (Recorder* r : {&tight, &universal, &geo, &rot, &det, &mcg}) report.checks.push_back(r->take());
  report.runtime_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace lenscontact
