#include "cli.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "monotile/fixtures.hpp"
#include "monotile/laves.hpp"
#include "monotile/render.hpp"
#include "monotile/signature.hpp"
#include "monotile/tilefamily.hpp"

using namespace monotile;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  args.insert(args.begin(), "monotile");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

bool has_line(const std::string& text, const std::string& line) {
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) {
    if (l == line) return true;
  }
  return false;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "monotile_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST(Cli, HatReport) {
  const CliResult r = run({"tile", "--name", "hat", "--report"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(has_line(r.out, "name: hat"));
  EXPECT_TRUE(has_line(r.out, "a: -1/2 + 1/2*sqrt3 (≈ 0.37)")) << r.out;
  EXPECT_TRUE(has_line(r.out, "edges: 8 x a + 6 x (1-a)"));
  EXPECT_TRUE(has_line(r.out, "simple: yes"));
  EXPECT_TRUE(has_line(r.out, "kites: 8"));
}

TEST(Cli, ReportMatchesLibrary) {
  const CliResult r = run({"tile", "--a", "1/(1+sqrt3)", "--report"});
  ASSERT_EQ(r.code, 0);
  const QS3 area = shoelace_area(build_tile(TileParam(parse_qs3("1/(1+sqrt3)"))).normalized);
  EXPECT_TRUE(has_line(r.out, "area: " + to_string(area) + " (≈ " + to_decimal(area, 6) + ")")) << r.out;
}

TEST(Cli, VerticesMatchLibrary) {
  const CliResult r = run({"tile", "--a", "1/3"});
  ASSERT_EQ(r.code, 0);
  std::string expected;
  for (const Point& p : build_tile(TileParam(QS3(Rational(1, 3)))).normalized) {
    expected += to_string(p.x) + " " + to_string(p.y) + "\n";
  }
  EXPECT_EQ(r.out, expected);
}

TEST(Cli, TileSvgMatchesLibrary) {
  const auto path = scratch("hat.svg");
  ASSERT_EQ(run({"tile", "--name", "hat", "--svg", path.string()}).code, 0);
  EXPECT_EQ(slurp(path.string()), scene_to_svg(polygon_scene(named_tile(NamedTile::kHat).normalized)));
}

TEST(Cli, AssembleHatFixture) {
  const CliResult r = run({"kite", "assemble", "--spec", data_path("hat.spec")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(has_line(r.out, "kites: 8"));
  EXPECT_TRUE(has_line(r.out, "area: 8*sqrt3 (≈ 13.856406)")) << r.out;
  EXPECT_NE(r.out.find("similar to: hat (scale 1 + sqrt3"), std::string::npos);
}

TEST(Cli, SearchThenAssembleRoundTrip) {
  const CliResult found = run({"kite", "search", "--target", "hat", "--n", "8"});
  ASSERT_EQ(found.code, 0) << found.err;
  const auto spec = scratch("found.spec");
  std::ofstream(spec) << found.out;
  const CliResult piped = run({"kite", "assemble", "--spec", spec.string()});
  const CliResult shipped = run({"kite", "assemble", "--spec", data_path("hat.spec")});
  ASSERT_EQ(piped.code, 0);
  auto signature_line = [](const std::string& text) {
    const auto at = text.find("signature: ");
    return text.substr(at, text.find('\n', at) - at);
  };
  EXPECT_EQ(signature_line(piped.out), signature_line(shipped.out));
}

TEST(Cli, SearchWithNoMatchFails) {
  const CliResult r = run({"kite", "search", "--target", "hat", "--n", "3"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("no 3-kite assembly"), std::string::npos);
}

TEST(Cli, LavesDual) {
  const CliResult r = run({"laves", "--base", "3464", "--radius", "2", "--dual"});
  ASSERT_EQ(r.code, 0) << r.err;
  const DualPatch d = dual(patch_3464(2));
  EXPECT_TRUE(has_line(r.out, "dual faces: " + std::to_string(d.faces.size())));
  EXPECT_NE(r.out.find("kite scale: 1/2 + 1/6*sqrt3"), std::string::npos) << r.out;
}

TEST(Cli, VerifyClosure) {
  const CliResult r = run({"verify", "--closure"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(Cli, Anim) {
  const auto dir = scratch("anim");
  std::filesystem::remove_all(dir);
  const CliResult r = run({"anim", "--frames", "3", "--out", dir.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "frame_000.svg\nframe_001.svg\nframe_002.svg\n");
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"tile"}).code, 2);
  EXPECT_EQ(run({"tile", "--a", "1/2", "--name", "hat"}).code, 2);
  EXPECT_EQ(run({"tile", "--name", "dragon"}).code, 2);
  EXPECT_EQ(run({"tile", "--a", "2"}).code, 2);
  EXPECT_EQ(run({"tile", "--a", "1/"}).code, 2);
  EXPECT_EQ(run({"laves", "--base", "square", "--radius", "2"}).code, 2);
  EXPECT_EQ(run({"anim", "--from", "1/2", "--to", "1/4", "--out", "/tmp/x"}).code, 2);
  EXPECT_EQ(run({"verify"}).code, 2);
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(run({"--help"}).code, 0); }

TEST(Cli, MissingSpecFileFails) {
  const CliResult r = run({"kite", "assemble", "--spec", "/nonexistent.spec"});
  EXPECT_NE(r.code, 0);
  EXPECT_FALSE(r.err.empty());
}
