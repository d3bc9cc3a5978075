#include "monotile/render.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <future>
#include <limits>
#include <sstream>

#include "monotile/errors.hpp"
#include "monotile/tilefamily.hpp"

namespace monotile {

namespace {

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  std::string s(buf);
  if (s == "-0.000000") s = "0.000000";
  return s;
}

ViewBox box_of_polygons(const std::vector<const Polygon*>& polys) {
  double x0 = std::numeric_limits<double>::infinity();
  double y0 = x0;
  double x1 = -x0;
  double y1 = -x0;
  for (const Polygon* p : polys) {
    for (const Point& v : *p) {
      const double x = qs3_to_float(v.x);
      const double y = qs3_to_float(v.y);
      x0 = std::min(x0, x);
      y0 = std::min(y0, y);
      x1 = std::max(x1, x);
      y1 = std::max(y1, y);
    }
  }
  const double margin = 0.05 * std::max(x1 - x0, y1 - y0);
  return {x0 - margin, y0 - margin, (x1 - x0) + 2 * margin, (y1 - y0) + 2 * margin};
}

}  // namespace

ViewBox Scene::bounds() const {
  if (items.empty()) throw DomainError("empty scene");
  if (viewbox) return *viewbox;
  std::vector<const Polygon*> polys;
  for (const auto& item : items) polys.push_back(&item.polygon);
  return box_of_polygons(polys);
}

const std::string& palette_color(std::size_t i) {
  static const std::array<std::string, 12> kPalette{
      "#e6194b", "#3cb44b", "#ffe119", "#4363d8", "#f58231", "#911eb4",
      "#46f0f0", "#f032e6", "#bcf60c", "#fabebe", "#008080", "#e6beff",
  };
  return kPalette[i % kPalette.size()];
}

std::string scene_to_svg(const Scene& scene) {
  const ViewBox box = scene.bounds();
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" << fixed6(box.min_x) << " "
      << fixed6(-(box.min_y + box.height)) << " " << fixed6(box.width) << " " << fixed6(box.height) << "\">\n";
  for (std::size_t i = 0; i < scene.items.size(); ++i) {
    const SceneItem& item = scene.items[i];
    out << "  <path d=\"";
    for (std::size_t k = 0; k < item.polygon.size(); ++k) {
      const Point& p = item.polygon[k];
      out << (k == 0 ? "M " : " L ") << fixed6(qs3_to_float(p.x)) << " " << fixed6(-qs3_to_float(p.y));
    }
    out << " Z\" fill=\"" << item.fill << "\" stroke=\"#000000\" stroke-width=\"" << fixed6(item.stroke_width)
        << "\" stroke-linejoin=\"round\"/>\n";
    if (item.label) {
      const Point c = centroid(item.polygon);
      out << "  <text x=\"" << fixed6(qs3_to_float(c.x)) << "\" y=\"" << fixed6(-qs3_to_float(c.y))
          << "\" font-size=\"" << fixed6(0.04 * std::max(box.width, box.height))
          << "\" text-anchor=\"middle\" dominant-baseline=\"middle\">" << i << "</text>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

void write_svg(const Scene& scene, const std::string& path) {
  const std::string text = scene_to_svg(scene);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text;
  if (!out) throw Error("cannot write '" + path + "'");
}

Scene assembly_scene(const Assembly& assembly) {
  Scene scene;
  for (std::size_t i = 0; i < assembly.size(); ++i) {
    scene.items.push_back({assembly.kite(i), palette_color(i), 0.02, false});
  }
  scene.items.push_back({boundary(assembly), "none", 0.06, false});
  return scene;
}

Scene polygon_scene(const Polygon& polygon, const std::string& fill) {
  Scene scene;
  scene.items.push_back({polygon, fill, 0.02, false});
  return scene;
}

Scene faces_scene(const std::vector<Polygon>& faces) {
  Scene scene;
  for (std::size_t i = 0; i < faces.size(); ++i) scene.items.push_back({faces[i], palette_color(i), 0.02, false});
  return scene;
}

Scene placements_scene(const std::vector<Placement>& placements) {
  Scene scene;
  for (std::size_t i = 0; i < placements.size(); ++i) {
    scene.items.push_back({placements[i].placed(), palette_color(i), 0.02, false});
  }
  return scene;
}

std::vector<std::string> animate(const QS3& a_from, const QS3& a_to, int frames, const std::string& out_dir) {
  if (a_from.sign() < 0 || a_to > QS3(1) || !(a_from < a_to)) {
    throw DomainError("animation range must satisfy 0 <= from < to <= 1");
  }
  if (frames < 2) throw DomainError("animation needs at least 2 frames");
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (!std::filesystem::is_directory(out_dir)) throw Error("cannot create output directory '" + out_dir + "'");

  const QS3 step = (a_to - a_from) / QS3(frames - 1);
  std::vector<std::future<Polygon>> jobs;
  for (int i = 0; i < frames; ++i) {
    const QS3 a = a_from + QS3(i) * step;
    jobs.push_back(std::async(std::launch::async, [a, i] {
      Polygon p = build_tile(TileParam(a)).normalized;
      if (!is_simple(p)) throw UnsupportedGeometry("frame " + std::to_string(i) + " is not simple");
      return p;
    }));
  }
  std::vector<Polygon> polys;
  for (auto& job : jobs) polys.push_back(job.get());

  std::vector<const Polygon*> all;
  for (const auto& p : polys) all.push_back(&p);
  const ViewBox common = box_of_polygons(all);

  std::vector<std::string> names;
  for (int i = 0; i < frames; ++i) {
    char name[32];
    std::snprintf(name, sizeof name, "frame_%03d.svg", i);
    Scene scene = polygon_scene(polys[static_cast<std::size_t>(i)]);
    scene.viewbox = common;
    write_svg(scene, (std::filesystem::path(out_dir) / name).string());
    names.emplace_back(name);
  }
  return names;
}

}  // namespace monotile
