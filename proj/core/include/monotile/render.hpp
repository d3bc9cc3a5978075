#pragma once

#include <optional>
#include <string>
#include <vector>

#include "monotile/kite.hpp"
#include "monotile/tiling.hpp"

namespace monotile {

struct SceneItem {
  Polygon polygon;
  std::string fill = "none";
  double stroke_width = 0.02;
  bool label = false;
};

/// Axis-aligned box in mathematical coordinates (y up).
struct ViewBox {
  double min_x = 0;
  double min_y = 0;
  double width = 0;
  double height = 0;
};

struct Scene {
  std::vector<SceneItem> items;
  std::optional<ViewBox> viewbox;  ///< defaults to the bounding box plus a 5% margin

  /// Throws DomainError for an empty scene.
  ViewBox bounds() const;
};

/// Fixed 12-colour palette, cycled by index.
const std::string& palette_color(std::size_t i);

/// SVG 1.1 text. Coordinates are printed with six decimals and y flipped, so
/// counter-clockwise input stays counter-clockwise on screen. Byte-stable.
/// Throws DomainError for an empty scene.
std::string scene_to_svg(const Scene& scene);

/// Writes scene_to_svg to `path`. Throws Error when the file cannot be written.
void write_svg(const Scene& scene, const std::string& path);

/// One coloured path per kite, then the black outline.
Scene assembly_scene(const Assembly& assembly);
Scene polygon_scene(const Polygon& polygon, const std::string& fill = "#cfe3f3");
Scene faces_scene(const std::vector<Polygon>& faces);
Scene placements_scene(const std::vector<Placement>& placements);

/// Writes frame_000.svg ... for a_i = a_from + i (a_to - a_from) / (frames - 1),
/// each drawing normalized build_tile(a_i) inside one common viewbox. Returns
/// the file names in frame order. Throws DomainError unless
/// 0 <= a_from < a_to <= 1 and frames >= 2, Error when `out_dir` is unwritable
/// and UnsupportedGeometry if a frame polygon is not simple.
std::vector<std::string> animate(const QS3& a_from, const QS3& a_to, int frames, const std::string& out_dir);

}  // namespace monotile
