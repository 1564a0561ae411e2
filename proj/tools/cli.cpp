#include "cli.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "lenscontact/bypass.hpp"
#include "lenscontact/farey_graph.hpp"
#include "lenscontact/mcg.hpp"
#include "lenscontact/surgery.hpp"
#include "lenscontact/sweep.hpp"
#include "lenscontact/tight_structures.hpp"
#include "lenscontact/unknots.hpp"

#include <algorithm>
#include <cstdio>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace lenscontact::cli {
namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { kDefault, kText, kJson, kTsv, kSvg };

Format parse_format(const std::string& name) {
  if (name.empty()) return Format::kDefault;
  if (name == "json") return Format::kJson;
  if (name == "tsv") return Format::kTsv;
  if (name == "svg") return Format::kSvg;
  if (name == "text") return Format::kText;
  throw UsageError("unknown format '" + name + "' (expected json, tsv or svg)");
}

// Resolves the requested format against what a command can emit; the first
// entry of `allowed` is the command's default.
Format resolve(Format requested, const char* command, std::initializer_list<Format> allowed) {
  if (requested == Format::kDefault) return *allowed.begin();
  if (std::find(allowed.begin(), allowed.end(), requested) == allowed.end()) {
    throw UsageError(std::string(command) + " does not support the requested --format");
  }
  return requested;
}

Integer parse_integer_arg(const std::string& text, const char* what) {
  const ExtRat x = ExtRat::parse(text);
  if (!x.is_integer()) throw UsageError(std::string(what) + " must be an integer, got '" + text + "'");
  return x.num();
}

LensSpace parse_lens(const std::string& p, const std::string& q) {
  return LensSpace(parse_integer_arg(p, "P"), parse_integer_arg(q, "Q"));
}

Knot parse_base_knot(const std::string& text) {
  const OrientedKnot k = parse_oriented_knot(text);
  if (is_reversed(k)) throw UsageError("surgery takes k1 or k2, got '" + text + "'");
  return underlying(k);
}

ShuffleClass structure_for(const LensSpace& lens, const std::optional<std::string>& signs) {
  if (signs) return classify_signs(lens, *signs);
  return enumerate_tight(lens).front();
}

Json slopes_json(const FareyPath& path) {
  Json arr = Json::array();
  for (const ExtRat& v : path.vertices) arr.push_back(v.str());
  return arr;
}

Json rationals_json(const std::vector<Rational>& values) {
  Json arr = Json::array();
  for (const Rational& r : values) arr.push_back(to_string(r));
  return arr;
}

std::vector<Integer> parse_integer_list(const std::string& text) {
  std::vector<Integer> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) values.push_back(parse_integer_arg(item, "rotation"));
  if (values.empty()) throw UsageError("--rots needs at least one value");
  return values;
}

std::string signs_field(const std::string& signs) { return signs.empty() ? "." : signs; }

// Strings such as "-inf" would otherwise be taken for clustered short flags.
std::vector<std::string> normalize(std::vector<std::string> args) {
  for (std::string& a : args) {
    if (a == "-inf" || a == "-infinity" || a == "-1/0") a = "inf";
  }
  return args;
}

// ---------------------------------------------------------------------------
// Commands

void cmd_farey_path(const std::string& from, const std::string& to, Format fmt, std::ostream& out) {
  const FareyPath path = geodesic(ExtRat::parse(from), ExtRat::parse(to));
  if (resolve(fmt, "farey path", {Format::kJson, Format::kTsv}) == Format::kTsv) {
    for (const ExtRat& v : path.vertices) out << v.str() << '\n';
    return;
  }
  out << slopes_json(path).dump() << '\n';
}

void cmd_bypass(const std::string& slope, const std::string& ruling, bool back, Format fmt,
                std::ostream& out) {
  const TorusState before{ExtRat::parse(slope), 2};
  const TorusState after =
      attach_bypass(before, ExtRat::parse(ruling), back ? BypassSide::kBack : BypassSide::kFront);
  if (resolve(fmt, "bypass", {Format::kText, Format::kJson}) == Format::kJson) {
    Json j;
    j["slope"] = before.dividing_slope.str();
    j["ruling"] = ExtRat::parse(ruling).str();
    j["side"] = back ? "back" : "front";
    j["result"] = after.dividing_slope.str();
    out << j.dump() << '\n';
    return;
  }
  out << after.dividing_slope.str() << '\n';
}

void cmd_tight(const LensSpace& lens, bool list, Format fmt, std::ostream& out) {
  if (!list) {
    const Format f = resolve(fmt, "tight-structures", {Format::kText, Format::kJson});
    const Integer count = count_tight_lens(lens);
    if (f == Format::kJson) {
      out << Json{{"lens", lens.str()}, {"count", count.str()}}.dump() << '\n';
    } else {
      out << count.str() << '\n';
    }
    return;
  }
  const std::vector<ShuffleClass> classes = enumerate_tight(lens);
  if (resolve(fmt, "tight-structures --list", {Format::kJson, Format::kTsv}) == Format::kTsv) {
    out << "signs\tuniversally_tight\n";
    for (const ShuffleClass& c : classes) {
      out << signs_field(c.signs()) << '\t' << (is_universally_tight(c) ? "true" : "false") << '\n';
    }
    return;
  }
  Json j;
  j["lens"] = lens.str();
  j["path"] = slopes_json(lens_geodesic(lens));
  j["count"] = classes.size();
  Json items = Json::array();
  for (const ShuffleClass& c : classes) {
    items.push_back({{"signs", c.signs()}, {"universally_tight", is_universally_tight(c)}});
  }
  j["structures"] = std::move(items);
  out << j.dump(2) << '\n';
}

void cmd_surgery(const LensSpace& lens, Knot knot, const std::optional<std::string>& rots,
                 Format fmt, std::ostream& out) {
  const SurgeryChain chain = build_chain(lens, knot);
  const IntMatrix m = linking_matrix(chain);
  const Integer det = determinant(m);
  std::optional<Rational> rot_q;
  if (rots) {
    const std::vector<Integer> rot = parse_integer_list(*rots);
    if (rot.size() != chain.framings.size()) {
      throw UsageError("--rots needs " + std::to_string(chain.framings.size()) + " values");
    }
    for (std::size_t i = 0; i < rot.size(); ++i) {
      const std::vector<Integer> allowed = admissible_rotations(chain.framings[i]);
      if (std::find(allowed.begin(), allowed.end(), rot[i]) == allowed.end()) {
        throw UsageError("rotation " + rot[i].str() + " is not realized on a component with framing " +
                         chain.framings[i].str());
      }
    }
    rot_q = rot_q_surgery(linking_data(chain, rot));
  }
  const std::vector<Rational> spectrum = rot_spectrum(lens, knot);

  if (resolve(fmt, "surgery", {Format::kText, Format::kJson}) == Format::kJson) {
    Json j;
    j["lens"] = lens.str();
    j["knot"] = knot == Knot::kK1 ? "K1" : "K2";
    Json framings = Json::array();
    for (const Integer& f : chain.framings) framings.push_back(f.str());
    j["framings"] = std::move(framings);
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
      Json row = Json::array();
      for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
      rows.push_back(std::move(row));
    }
    j["matrix"] = std::move(rows);
    j["det"] = det.str();
    if (rot_q) j["rot_q"] = to_string(*rot_q);
    j["spectrum"] = rationals_json(spectrum);
    out << j.dump(2) << '\n';
    return;
  }
  out << "lens: " << lens.str() << '\n';
  out << "framings:";
  for (const Integer& f : chain.framings) out << ' ' << f.str();
  out << "\nM:\n";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? "\t" : "  ") << m(r, c).str();
    out << '\n';
  }
  out << "det: " << det.str() << '\n';
  if (rot_q) {
    out << "rot_q: " << to_string(*rot_q) << '\n';
  } else {
    out << "spectrum:";
    for (const Rational& r : spectrum) out << ' ' << to_string(r);
    out << '\n';
  }
}

void cmd_unknots(const LensSpace& lens, const std::optional<std::string>& signs, Format fmt,
                 std::ostream& out) {
  const ShuffleClass ts = structure_for(lens, signs);
  const std::vector<LegendrianClass> peaks = legendrian_classification(lens, ts);
  if (resolve(fmt, "unknots", {Format::kTsv, Format::kJson}) == Format::kJson) {
    Json j;
    j["lens"] = lens.str();
    j["structure"] = ts.signs();
    Json rows = Json::array();
    for (const LegendrianClass& c : peaks) {
      rows.push_back({{"knot", to_string(c.knot)},
                      {"tb_q", to_string(c.tb_q)},
                      {"rot_q", to_string(c.rot_q)},
                      {"sl_q", to_string(sl_q(c.tb_q, c.rot_q))}});
    }
    j["peaks"] = std::move(rows);
    out << j.dump(2) << '\n';
    return;
  }
  out << "knot\ttb_q\trot_q\tsl_q\n";
  for (const LegendrianClass& c : peaks) {
    out << to_string(c.knot) << '\t' << to_string(c.tb_q) << '\t' << to_string(c.rot_q) << '\t'
        << to_string(sl_q(c.tb_q, c.rot_q)) << '\n';
  }
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

std::string fmt_px(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

void render_svg(const LensSpace& lens, const MountainRange& range, const std::string& signs,
                std::ostream& out) {
  constexpr double kUnit = 40.0;
  constexpr double kMargin = 60.0;
  // The lattice spans rot in [peak - depth, peak + depth] and tb in
  // [peak - depth, peak]; one grid cell is one unit on both axes.
  const double rot0 = to_double(range.peak.rot_q) - range.depth;
  const double tb_top = to_double(range.peak.tb_q);
  const double width = 2.0 * range.depth * kUnit + 2 * kMargin;
  const double height = range.depth * kUnit + 2 * kMargin + 20.0;
  auto x_of = [&](const Rational& rot) { return kMargin + (to_double(rot) - rot0) * kUnit; };
  auto y_of = [&](const Rational& tb) { return kMargin + (tb_top - to_double(tb)) * kUnit; };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt_px(width) << "\" height=\""
      << fmt_px(height) << "\" viewBox=\"0 0 " << fmt_px(width) << ' ' << fmt_px(height)
      << "\">\n";
  out << "  <title>" << lens.str() << ' ' << to_string(range.knot) << " structure "
      << signs_field(signs) << "</title>\n";
  out << "  <g stroke=\"#dddddd\" stroke-width=\"1\">\n";
  for (int i = 0; i <= 2 * range.depth; ++i) {
    const double x = kMargin + i * kUnit;
    out << "    <line x1=\"" << fmt_px(x) << "\" y1=\"" << fmt_px(kMargin) << "\" x2=\"" << fmt_px(x)
        << "\" y2=\"" << fmt_px(kMargin + range.depth * kUnit) << "\"/>\n";
  }
  for (int i = 0; i <= range.depth; ++i) {
    const double y = kMargin + i * kUnit;
    out << "    <line x1=\"" << fmt_px(kMargin) << "\" y1=\"" << fmt_px(y) << "\" x2=\""
        << fmt_px(kMargin + 2 * range.depth * kUnit) << "\" y2=\"" << fmt_px(y) << "\"/>\n";
  }
  out << "  </g>\n";
  out << "  <g font-family=\"sans-serif\" font-size=\"11\" fill=\"#333333\">\n";
  for (int k = 0; k <= range.depth; ++k) {
    const Rational tb = range.peak.tb_q - k;
    out << "    <text x=\"" << fmt_px(kMargin - 8) << "\" y=\"" << fmt_px(y_of(tb) + 4)
        << "\" text-anchor=\"end\">" << to_string(tb) << "</text>\n";
  }
  for (int i = 0; i <= 2 * range.depth; ++i) {
    const Rational rot = range.peak.rot_q - range.depth + i;
    out << "    <text x=\"" << fmt_px(x_of(rot)) << "\" y=\"" << fmt_px(kMargin - 10)
        << "\" text-anchor=\"middle\">" << to_string(rot) << "</text>\n";
  }
  out << "    <text x=\"" << fmt_px(width / 2) << "\" y=\"" << fmt_px(18.0)
      << "\" text-anchor=\"middle\">rot_Q</text>\n";
  out << "    <text x=\"" << fmt_px(14.0) << "\" y=\"" << fmt_px(kMargin + range.depth * kUnit / 2)
      << "\" text-anchor=\"middle\" transform=\"rotate(-90 14 "
      << fmt_px(kMargin + range.depth * kUnit / 2) << ")\">tb_Q</text>\n";
  if (!range.identified_with.empty()) {
    std::string note = "smoothly isotopic to";
    for (OrientedKnot k : range.identified_with) note += ' ' + to_string(k);
    out << "    <text x=\"" << fmt_px(kMargin) << "\" y=\"" << fmt_px(height - 12)
        << "\">" << note << "</text>\n";
  }
  out << "  </g>\n";
  out << "  <g fill=\"#000000\">\n";
  for (const MountainPoint& d : range.dots) {
    out << "    <circle cx=\"" << fmt_px(x_of(d.rot_q)) << "\" cy=\"" << fmt_px(y_of(d.tb_q))
        << "\" r=\"4\"><title>(" << to_string(d.rot_q) << ", " << to_string(d.tb_q)
        << ")</title></circle>\n";
  }
  out << "  </g>\n</svg>\n";
}

void cmd_mountain(const LensSpace& lens, const std::string& knot_text,
                  const std::optional<std::string>& signs, int depth, Format fmt, std::ostream& out) {
  const ShuffleClass ts = structure_for(lens, signs);
  const MountainRange range = mountain_range(lens, ts, parse_oriented_knot(knot_text), depth);
  switch (resolve(fmt, "mountain-range", {Format::kTsv, Format::kJson, Format::kSvg})) {
    case Format::kJson: {
      Json j;
      j["lens"] = lens.str();
      j["structure"] = ts.signs();
      j["knot"] = to_string(range.knot);
      j["depth"] = range.depth;
      j["peak"] = {{"rot_q", to_string(range.peak.rot_q)}, {"tb_q", to_string(range.peak.tb_q)}};
      Json dots = Json::array();
      for (const MountainPoint& d : range.dots) {
        dots.push_back({{"rot_q", to_string(d.rot_q)}, {"tb_q", to_string(d.tb_q)}});
      }
      j["dots"] = std::move(dots);
      Json ids = Json::array();
      for (OrientedKnot k : range.identified_with) ids.push_back(to_string(k));
      j["smoothly_identified_with"] = std::move(ids);
      out << j.dump(2) << '\n';
      return;
    }
    case Format::kSvg:
      render_svg(lens, range, ts.signs(), out);
      return;
    default:
      out << "depth\trot_q\ttb_q\n";
      for (const MountainPoint& d : range.dots) {
        out << to_string(range.peak.tb_q - d.tb_q) << '\t' << to_string(d.rot_q) << '\t'
            << to_string(d.tb_q) << '\n';
      }
  }
}

void cmd_mcg(const std::vector<std::string>& target, bool smooth, bool contact, bool rel_torus,
             bool kernel, Format fmt, std::ostream& out) {
  const Format f = resolve(fmt, "mcg", {Format::kText, Format::kJson});
  if (target.size() == 1) {
    if (target[0] != "s1s2") throw UsageError("mcg takes P Q or s1s2");
    if (smooth || rel_torus || kernel) throw UsageError("mcg s1s2 only has a contact table");
    const GroupDescription g = contact_mcg_s1s2();
    if (f == Format::kJson) {
      out << Json{{"manifold", "S1xS2"}, {"contact", to_string(g)}}.dump() << '\n';
    } else {
      out << to_string(g) << '\n';
    }
    return;
  }
  if (target.size() != 2) throw UsageError("mcg takes P Q or s1s2");
  const LensSpace lens = parse_lens(target[0], target[1]);
  std::vector<std::pair<std::string, GroupDescription>> rows;
  const bool all = !smooth && !contact && !rel_torus && !kernel;
  if (all || smooth) rows.emplace_back("smooth", smooth_mcg(lens));
  if (all || contact) rows.emplace_back("contact", contact_mcg(lens).group);
  if (all || rel_torus) rows.emplace_back("rel-torus", contact_mcg_rel_torus(lens));
  if (all || kernel) rows.emplace_back("kernel", inclusion_kernel(lens));

  if (f == Format::kJson) {
    Json j;
    j["lens"] = lens.str();
    for (const auto& [label, g] : rows) j[label] = to_string(g);
    out << j.dump() << '\n';
    return;
  }
  if (rows.size() == 1) {
    out << to_string(rows.front().second) << '\n';
    return;
  }
  for (const auto& [label, g] : rows) out << label << ": " << to_string(g) << '\n';
}

int cmd_check(int p_max, Format fmt, std::ostream& out) {
  if (p_max < 2) throw UsageError("--pmax must be at least 2");
  const SweepReport report = check_sweep(p_max);
  std::size_t failed = 0;
  for (const CheckResult& c : report.checks) failed += c.passed ? 0 : 1;

  if (resolve(fmt, "check", {Format::kText, Format::kJson}) == Format::kJson) {
    Json j;
    j["p_max"] = report.p_max;
    Json checks = Json::array();
    for (const CheckResult& c : report.checks) {
      Json item{{"name", c.name}, {"passed", c.passed}, {"cases", c.cases}};
      if (c.counterexample) item["counterexample"] = *c.counterexample;
      checks.push_back(std::move(item));
    }
    j["checks"] = std::move(checks);
    j["runtime_seconds"] = report.runtime_seconds;
    out << j.dump(2) << '\n';
  } else {
    for (const CheckResult& c : report.checks) {
      out << (c.passed ? "PASS " : "FAIL ") << c.name << " (" << c.cases << " cases)";
      if (c.counterexample) out << ": " << *c.counterexample;
      out << '\n';
    }
    char runtime[32];
    std::snprintf(runtime, sizeof runtime, "%.3f", report.runtime_seconds);
    out << report.checks.size() << " checks, " << failed << " failed, p <= " << p_max << ", "
        << runtime << " s\n";
  }
  return failed == 0 ? kExitOk : kExitCheckFailed;
}

}  // namespace

std::string synopsis() {
  return "usage: lenscontact [--format json|tsv|svg] COMMAND ...\n"
         "\n"
         "commands:\n"
         "  farey path FROM TO                       Farey geodesic, clockwise from FROM to TO\n"
         "  bypass S R --front|--back                dividing slope after a bypass along ruling R\n"
         "  tight-structures P Q [--list]            tight contact structures on L(P,Q)\n"
         "  surgery P Q --knot k1|k2 [--rots a,b,..]  linking matrix, det and rot_Q\n"
         "  unknots P Q [--structure SIGNS]          peak invariants of the rational unknots\n"
         "  mountain-range P Q --knot K [--structure SIGNS] [--depth D]\n"
         "                                           Legendrian mountain range (tsv, json, svg)\n"
         "  mcg P Q [--smooth|--contact|--rel-torus|--kernel]\n"
         "  mcg s1s2                                 mapping class groups\n"
         "  check [--pmax N]                         cross-validation sweep\n"
         "\n"
         "slopes are written a/b, a, or inf; knots are k1, -k1, k2, -k2.\n";
}

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Contact invariants of lens spaces", "lenscontact"};
  app.require_subcommand(1);
  app.set_help_flag();
  std::string format_name;
  app.add_option("--format", format_name, "json, tsv or svg");

  auto* farey = app.add_subcommand("farey", "Farey graph queries");
  farey->require_subcommand(1);
  farey->fallthrough();
  auto* farey_path = farey->add_subcommand("path", "Farey geodesic");
  farey_path->fallthrough();
  std::string from, to;
  farey_path->add_option("from", from)->required();
  farey_path->add_option("to", to)->required();

  auto* bypass = app.add_subcommand("bypass", "bypass attachment");
  bypass->fallthrough();
  std::string slope, ruling;
  bool front = false, back = false;
  bypass->add_option("slope", slope)->required();
  bypass->add_option("ruling", ruling)->required();
  auto* front_flag = bypass->add_flag("--front", front);
  auto* back_flag = bypass->add_flag("--back", back);
  front_flag->excludes(back_flag);

  std::string p_text, q_text;
  auto* tight = app.add_subcommand("tight-structures", "tight contact structures");
  tight->fallthrough();
  bool list = false;
  tight->add_option("P", p_text)->required();
  tight->add_option("Q", q_text)->required();
  tight->add_flag("--list", list);

  auto* surgery = app.add_subcommand("surgery", "surgery presentation of a rational unknot");
  surgery->fallthrough();
  std::string knot_text;
  std::optional<std::string> rots;
  surgery->add_option("P", p_text)->required();
  surgery->add_option("Q", q_text)->required();
  surgery->add_option("--knot", knot_text)->required();
  surgery->add_option("--rots", rots);

  auto* unknots = app.add_subcommand("unknots", "rational unknot invariants");
  unknots->fallthrough();
  std::optional<std::string> structure;
  unknots->add_option("P", p_text)->required();
  unknots->add_option("Q", q_text)->required();
  unknots->add_option("--structure", structure);

  auto* mountain = app.add_subcommand("mountain-range", "Legendrian mountain range");
  mountain->fallthrough();
  int depth = 4;
  mountain->add_option("P", p_text)->required();
  mountain->add_option("Q", q_text)->required();
  mountain->add_option("--knot", knot_text)->required();
  mountain->add_option("--structure", structure);
  mountain->add_option("--depth", depth);

  auto* mcg = app.add_subcommand("mcg", "mapping class groups");
  mcg->fallthrough();
  std::vector<std::string> mcg_target;
  bool smooth = false, contact = false, rel_torus = false, kernel = false;
  mcg->add_option("target", mcg_target)->required()->expected(1, 2);
  mcg->add_flag("--smooth", smooth);
  mcg->add_flag("--contact", contact);
  mcg->add_flag("--rel-torus", rel_torus);
  mcg->add_flag("--kernel", kernel);

  auto* check = app.add_subcommand("check", "cross-validation sweep");
  check->fallthrough();
  int p_max = 20;
  check->add_option("--pmax", p_max);

  std::vector<std::string> args = normalize(raw_args);
  std::reverse(args.begin(), args.end());  // CLI11 consumes a reversed vector
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << synopsis();
    return kExitUsage;
  }

  try {
    const Format fmt = parse_format(format_name);
    if (farey_path->parsed()) {
      cmd_farey_path(from, to, fmt, out);
    } else if (bypass->parsed()) {
      if (!front && !back) throw UsageError("bypass needs --front or --back");
      cmd_bypass(slope, ruling, back, fmt, out);
    } else if (tight->parsed()) {
      cmd_tight(parse_lens(p_text, q_text), list, fmt, out);
    } else if (surgery->parsed()) {
      cmd_surgery(parse_lens(p_text, q_text), parse_base_knot(knot_text), rots, fmt, out);
    } else if (unknots->parsed()) {
      cmd_unknots(parse_lens(p_text, q_text), structure, fmt, out);
    } else if (mountain->parsed()) {
      cmd_mountain(parse_lens(p_text, q_text), knot_text, structure, depth, fmt, out);
    } else if (mcg->parsed()) {
      cmd_mcg(mcg_target, smooth, contact, rel_torus, kernel, fmt, out);
    } else if (check->parsed()) {
      return cmd_check(p_max, fmt, out);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n\n" << synopsis();
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n\n" << synopsis();
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n\n" << synopsis();
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace lenscontact::cli
