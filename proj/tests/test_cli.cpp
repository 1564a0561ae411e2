#include "cli.hpp"

#include "lenscontact/rational.hpp"

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <sstream>

namespace lenscontact::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, McgContact) {
  const Result r = call({"mcg", "8", "3", "--contact"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "Z2 [sigma]\n");
}

TEST(Cli, McgAllTables) {
  const Result r = call({"mcg", "5", "4"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out,
            "smooth: Z2 [sigma] (sigma = tau)\n"
            "contact: Z2 [sigma]\n"
            "rel-torus: Z2xZ2 [sigma, tau]\n"
            "kernel: Z2 [sigma*tau]\n");
}

TEST(Cli, McgS1S2) {
  EXPECT_EQ(call({"mcg", "s1s2"}).out, "ZxZ2 [delta, eta]\n");
  EXPECT_EQ(call({"mcg", "s2s2"}).code, kExitUsage);
}

TEST(Cli, UnknotsL21) {
  const Result r = call({"unknots", "2", "1"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "knot\ttb_q\trot_q\tsl_q\nK1\t-1/2\t0\t-1/2\n");
}

TEST(Cli, UnknotsWithStructure) {
  const Result r = call({"unknots", "3", "1", "--structure", "-"});
  EXPECT_EQ(r.out, "knot\ttb_q\trot_q\tsl_q\nK1\t-2/3\t1/3\t-1\n-K1\t-2/3\t-1/3\t-1/3\n");
  EXPECT_EQ(call({"unknots", "3", "1", "--structure", "++"}).code, kExitUsage);
}

TEST(Cli, Check) {
  const Result r = call({"check", "--pmax", "20"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("6 checks, 0 failed"), std::string::npos) << r.out;
  EXPECT_EQ(call({"check", "--pmax", "1"}).code, kExitUsage);
}

TEST(Cli, FareyPathJson) {
  const Result r = call({"farey", "path", "-12/5", "0"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "[\"-12/5\",\"-7/3\",\"-2\",\"-1\",\"0\"]\n");
  // Every emitted slope parses back to the vertex it names.
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(ExtRat::parse(j[1].get<std::string>()), ExtRat(-7, 3));
}

TEST(Cli, FareyPathThroughInfinity) {
  EXPECT_EQ(call({"farey", "path", "-inf", "0"}).out, "[\"inf\",\"0\"]\n");
  EXPECT_EQ(call({"--format", "tsv", "farey", "path", "5/2", "-3"}).out, "5/2\n3\ninf\n-3\n");
}

TEST(Cli, Bypass) {
  EXPECT_EQ(call({"bypass", "-5/2", "0", "--front"}).out, "-2\n");
  EXPECT_EQ(call({"bypass", "-2", "-5/2", "--back"}).out, "-5/2\n");
  EXPECT_EQ(call({"bypass", "-2", "0"}).code, kExitUsage);
  EXPECT_EQ(call({"bypass", "-2", "0", "--front", "--back"}).code, kExitUsage);
  EXPECT_EQ(call({"bypass", "-2", "-2", "--front"}).code, kExitUsage);
}

TEST(Cli, TightStructures) {
  EXPECT_EQ(call({"tight-structures", "9", "2"}).out, "4\n");
  const Result r = call({"tight-structures", "12", "5", "--list"});
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["count"], 4);
  EXPECT_EQ(j["path"].size(), 5u);
  EXPECT_EQ(j["structures"][0]["signs"], "++");
  EXPECT_EQ(j["structures"][0]["universally_tight"], true);
  EXPECT_EQ(j["structures"][1]["universally_tight"], false);
  const Result tsv = call({"--format", "tsv", "tight-structures", "2", "1", "--list"});
  EXPECT_EQ(tsv.out, "signs\tuniversally_tight\n.\ttrue\n");
}

TEST(Cli, Surgery) {
  const Result r = call({"surgery", "5", "2", "--knot", "k1", "--rots", "-1,0"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("det: 5"), std::string::npos);
  EXPECT_NE(r.out.find("rot_q: -2/5"), std::string::npos);
  const Result j = call({"--format", "json", "surgery", "3", "1", "--knot", "k2"});
  const auto parsed = nlohmann::json::parse(j.out);
  EXPECT_EQ(parsed["spectrum"], nlohmann::json({"-1/3", "1/3"}));
  EXPECT_EQ(parsed["det"], "-3");
  EXPECT_EQ(call({"surgery", "5", "2", "--knot", "-k1"}).code, kExitUsage);
  EXPECT_EQ(call({"surgery", "5", "2", "--knot", "k1", "--rots", "1,0"}).code, kExitOk);
  EXPECT_EQ(call({"surgery", "5", "2", "--knot", "k1", "--rots", "3,0"}).code, kExitUsage);
  EXPECT_EQ(call({"surgery", "5", "2", "--knot", "k1", "--rots", "1"}).code, kExitUsage);
}

TEST(Cli, MountainRangeTsv) {
  const Result r = call({"mountain-range", "2", "1", "--knot", "k1", "--structure", "", "--depth",
                         "1"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "depth\trot_q\ttb_q\n0\t0\t-1/2\n1\t-1\t-3/2\n1\t1\t-3/2\n");
}

TEST(Cli, MountainRangeJsonDefaultsToDepthFour) {
  const Result r = call({"--format", "json", "mountain-range", "2", "1", "--knot", "k1"});
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["depth"], 4);
  EXPECT_EQ(j["dots"].size(), 15u);
  EXPECT_EQ(j["peak"]["tb_q"], "-1/2");
  EXPECT_EQ(j["smoothly_identified_with"].size(), 3u);
}

TEST(Cli, MountainRangeSvg) {
  const Result r = call({"mountain-range", "3", "1", "--knot", "-k1", "--format", "svg"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out.rfind("<svg", 0), 0u);
  std::size_t circles = 0;
  for (std::size_t pos = r.out.find("<circle"); pos != std::string::npos;
       pos = r.out.find("<circle", pos + 1)) {
    ++circles;
  }
  EXPECT_EQ(circles, 15u);
  // -K1 reverses the all-plus peak rotation -1/3.
  EXPECT_NE(r.out.find("(1/3, -2/3)"), std::string::npos);
  EXPECT_NE(r.out.find("(-11/3, -14/3)"), std::string::npos);
}

TEST(Cli, Deterministic) {
  const std::vector<std::string> args{"--format", "json", "tight-structures", "30", "7", "--list"};
  EXPECT_EQ(call(args).out, call(args).out);
}

TEST(Cli, UsageErrors) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {},
           {"frobnicate"},
           {"farey"},
           {"tight-structures", "4", "2"},
           {"tight-structures", "x", "1"},
           {"unknots", "5", "2", "--format", "svg"},
           {"--format", "xml", "mcg", "5", "2"},
           {"mountain-range", "5", "2", "--knot", "k3"},
           {"mountain-range", "5", "2", "--knot", "k1", "--depth", "-1"},
       }) {
    const Result r = call(args);
    EXPECT_EQ(r.code, kExitUsage);
    EXPECT_NE(r.err.find("usage: lenscontact"), std::string::npos);
    EXPECT_TRUE(r.out.empty());
  }
}

}  // namespace
}  // namespace lenscontact::cli
