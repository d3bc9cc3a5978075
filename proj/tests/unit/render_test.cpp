#include "monotile/render.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <regex>

#include <unistd.h>

#include "../golden_scenes.hpp"
#include "monotile/errors.hpp"
#include "monotile/fixtures.hpp"

using namespace monotile;

namespace {

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

std::filesystem::path temp_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("monotile_" + name + "_" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  return dir;
}

}  // namespace

TEST(Render, SingleKite) {
  const std::string svg = scene_to_svg(polygon_scene(laves_kite().polygon()));
  EXPECT_EQ(count(svg, "<path"), 1u);
  EXPECT_EQ(count(svg, " L "), 3u);
  EXPECT_EQ(count(svg, " Z\""), 1u);
  EXPECT_NE(svg.find("version=\"1.1\""), std::string::npos);
  // C = (1, sqrt3) is drawn with y flipped.
  EXPECT_NE(svg.find("1.000000 -1.732051"), std::string::npos);
}

TEST(Render, HatAssemblyHasKitesAndOutline) {
  const std::string svg = scene_to_svg(assembly_scene(assemble(read_assembly_fixture(NamedTile::kHat).spec)));
  EXPECT_EQ(count(svg, "<path"), 9u);
  EXPECT_EQ(count(svg, "fill=\"none\""), 1u);
}

TEST(Render, Deterministic) {
  const Scene s = faces_scene(dual(patch_3464(2)).faces);
  EXPECT_EQ(scene_to_svg(s), scene_to_svg(s));
}

TEST(Render, EmptySceneThrows) { EXPECT_THROW(scene_to_svg(Scene{}), DomainError); }

TEST(Render, ViewBoxContainsItems) {
  const Scene s = polygon_scene(named_tile(NamedTile::kHat).normalized);
  const ViewBox box = s.bounds();
  for (const Point& p : s.items[0].polygon) {
    EXPECT_GT(qs3_to_float(p.x), box.min_x);
    EXPECT_LT(qs3_to_float(p.x), box.min_x + box.width);
    EXPECT_GT(qs3_to_float(p.y), box.min_y);
    EXPECT_LT(qs3_to_float(p.y), box.min_y + box.height);
  }
}

TEST(Render, PaletteCycles) {
  EXPECT_EQ(palette_color(0), palette_color(12));
  EXPECT_NE(palette_color(0), palette_color(1));
}

TEST(Render, Golden) {
  for (const auto& [name, scene] : golden::scenes()) {
    const std::string svg = scene_to_svg(scene);
    if (golden::updating()) {
      write_svg(scene, golden::dir() + "/" + name);
      continue;
    }
    EXPECT_EQ(svg, golden::read(name)) << name;
  }
}

TEST(Animate, WritesFrames) {
  const auto dir = temp_dir("anim");
  const auto names = animate(QS3::fraction(1, 1000), QS3::fraction(999, 1000), 5, dir.string());
  ASSERT_EQ(names.size(), 5u);
  EXPECT_EQ(names.front(), "frame_000.svg");
  EXPECT_EQ(names.back(), "frame_004.svg");
  // Every frame shares one viewbox.
  const std::regex vb("viewBox=\"([^\"]*)\"");
  std::string first;
  for (const auto& n : names) {
    std::ifstream in(dir / n);
    std::stringstream buf;
    buf << in.rdbuf();
    std::smatch m;
    const std::string text = buf.str();
    ASSERT_TRUE(std::regex_search(text, m, vb));
    if (first.empty()) first = m[1];
    EXPECT_EQ(m[1], first);
  }
  std::filesystem::remove_all(dir);
}

TEST(Animate, TwoFrames) {
  const auto dir = temp_dir("anim2");
  EXPECT_EQ(animate(QS3(0), QS3(1), 2, dir.string()).size(), 2u);
  std::filesystem::remove_all(dir);
}

TEST(Animate, Errors) {
  const auto dir = temp_dir("anim3");
  EXPECT_THROW(animate(QS3::fraction(1, 2), QS3::fraction(1, 4), 5, dir.string()), DomainError);
  EXPECT_THROW(animate(QS3(0), QS3(2), 5, dir.string()), DomainError);
  EXPECT_THROW(animate(QS3(0), QS3(1), 1, dir.string()), DomainError);
  EXPECT_THROW(animate(QS3(0), QS3(1), 2, "/proc/monotile/frames"), Error);
  std::filesystem::remove_all(dir);
}
