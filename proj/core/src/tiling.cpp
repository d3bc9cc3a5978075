#include "monotile/tiling.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "monotile/errors.hpp"
#include "monotile/tilefamily.hpp"

namespace monotile {

Polygon Placement::placed() const {
  Polygon p = transformed(tile, map);
  return shoelace_area(p).sign() < 0 ? reversed(p) : p;
}

bool PatchReport::passed() const {
  return std::all_of(angle_closures.begin(), angle_closures.end(), [](bool b) { return b; }) &&
         std::all_of(edge_matches.begin(), edge_matches.end(), [](bool b) { return b; }) && overlaps.empty() &&
         problems.empty();
}

namespace {

struct Box {
  double x0, y0, x1, y1;
  bool overlaps(const Box& o, double eps = 1e-9) const {
    return x0 <= o.x1 + eps && o.x0 <= x1 + eps && y0 <= o.y1 + eps && o.y0 <= y1 + eps;
  }
};

Box box_of(const std::vector<std::pair<double, double>>& pts) {
  Box b{pts[0].first, pts[0].second, pts[0].first, pts[0].second};
  for (const auto& [x, y] : pts) {
    b.x0 = std::min(b.x0, x);
    b.y0 = std::min(b.y0, y);
    b.x1 = std::max(b.x1, x);
    b.y1 = std::max(b.y1, y);
  }
  return b;
}

struct SubEdge {
  int tile;
  int from;
  int to;
};

}  // namespace

PatchReport verify_patch(const std::vector<Placement>& placements) {
  PatchReport report;
  const std::size_t n = placements.size();
  std::vector<Polygon> placed;
  placed.reserve(n);
  for (const auto& p : placements) placed.push_back(p.placed());

  // Vertex table.
  std::map<Point, int, PointLess> index;
  std::vector<Point> vertices;
  std::vector<std::pair<double, double>> approx;
  auto vertex_id = [&](const Point& p) {
    auto [it, inserted] = index.try_emplace(p, static_cast<int>(vertices.size()));
    if (inserted) {
      vertices.push_back(p);
      approx.emplace_back(qs3_to_float(p.x), qs3_to_float(p.y));
    }
    return it->second;
  };
  std::vector<std::vector<int>> tile_ids(n);
  std::vector<Box> boxes(n);
  for (std::size_t t = 0; t < n; ++t) {
    std::vector<std::pair<double, double>> pts;
    for (const Point& p : placed[t]) {
      tile_ids[t].push_back(vertex_id(p));
      pts.push_back(approx[static_cast<std::size_t>(tile_ids[t].back())]);
    }
    boxes[t] = box_of(pts);
  }

  // Split every edge at the patch vertices lying inside it. Each tile's
  // refined cycle records the angle class at every vertex (6 at split points).
  std::vector<SubEdge> sub_edges;
  std::vector<int> angle_total(vertices.size(), 0);
  for (std::size_t t = 0; t < n; ++t) {
    const Polygon& poly = placed[t];
    const auto angles = interior_angle_classes(poly);
    if (!angles) throw UnsupportedGeometry("placed tile has an angle off the 30-degree grid");
    const std::size_t m = poly.size();
    for (std::size_t i = 0; i < m; ++i) {
      const int a = tile_ids[t][i];
      const int b = tile_ids[t][(i + 1) % m];
      angle_total[static_cast<std::size_t>(a)] += (*angles)[i];
      const auto& pa = approx[static_cast<std::size_t>(a)];
      const auto& pb = approx[static_cast<std::size_t>(b)];
      const Box eb = box_of({pa, pb});
      std::vector<std::pair<QS3, int>> inner;
      const Vec2 dir = vertices[static_cast<std::size_t>(b)] - vertices[static_cast<std::size_t>(a)];
      for (std::size_t v = 0; v < vertices.size(); ++v) {
        if (static_cast<int>(v) == a || static_cast<int>(v) == b) continue;
        if (!eb.overlaps(Box{approx[v].first, approx[v].second, approx[v].first, approx[v].second})) continue;
        if (strictly_inside_segment(vertices[v], vertices[static_cast<std::size_t>(a)],
                                    vertices[static_cast<std::size_t>(b)])) {
          inner.emplace_back(dot(vertices[v] - vertices[static_cast<std::size_t>(a)], dir), static_cast<int>(v));
        }
      }
      std::sort(inner.begin(), inner.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
      int prev = a;
      for (const auto& [_, v] : inner) {
        sub_edges.push_back({static_cast<int>(t), prev, v});
        angle_total[static_cast<std::size_t>(v)] += 6;
        prev = v;
      }
      sub_edges.push_back({static_cast<int>(t), prev, b});
    }
  }

  std::set<std::pair<int, int>> overlap_pairs;
  auto add_overlap = [&](int i, int j) { overlap_pairs.insert({std::min(i, j), std::max(i, j)}); };

  // Edge matching.
  std::map<std::pair<int, int>, std::vector<std::size_t>> by_key;
  for (std::size_t e = 0; e < sub_edges.size(); ++e) {
    const auto& s = sub_edges[e];
    by_key[{std::min(s.from, s.to), std::max(s.from, s.to)}].push_back(e);
  }
  std::vector<int> vertex_open(vertices.size(), 0);
  for (const auto& [key, list] : by_key) {
    bool ok = true;
    if (list.size() == 1) {
      // Outer boundary unless the far side is covered by another tile.
      const auto& s = sub_edges[list[0]];
      const Point mid = QS3::fraction(1, 2) * (vertices[static_cast<std::size_t>(s.from)] +
                                               vertices[static_cast<std::size_t>(s.to)]);
      const double mx = (approx[static_cast<std::size_t>(s.from)].first + approx[static_cast<std::size_t>(s.to)].first) / 2;
      const double my = (approx[static_cast<std::size_t>(s.from)].second + approx[static_cast<std::size_t>(s.to)].second) / 2;
      for (std::size_t t = 0; t < n; ++t) {
        if (static_cast<int>(t) == s.tile || !boxes[t].overlaps(Box{mx, my, mx, my})) continue;
        const Containment c = locate_point(mid, placed[t]);
        if (c == Containment::kInside) {
          add_overlap(s.tile, static_cast<int>(t));
          ok = false;
        } else if (c == Containment::kBoundary) {
          report.problems.push_back("edge partially shared between tiles " + std::to_string(s.tile) + " and " +
                                    std::to_string(t));
          ok = false;
        }
      }
      ++vertex_open[static_cast<std::size_t>(key.first)];
      ++vertex_open[static_cast<std::size_t>(key.second)];
    } else if (list.size() == 2) {
      const auto& s = sub_edges[list[0]];
      const auto& r = sub_edges[list[1]];
      if (s.tile == r.tile) {
        ok = false;
        report.problems.push_back("tile " + std::to_string(s.tile) + " touches itself");
      } else if (s.from == r.from) {
        // Same direction: both tiles lie on the same side of the edge.
        add_overlap(s.tile, r.tile);
        ok = false;
      }
    } else {
      ok = false;
      for (std::size_t i = 0; i < list.size(); ++i) {
        for (std::size_t j = i + 1; j < list.size(); ++j) add_overlap(sub_edges[list[i]].tile, sub_edges[list[j]].tile);
      }
    }
    report.edge_matches.push_back(ok);
  }

  // Angle closure at interior vertices; no vertex may exceed a full turn.
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    if (angle_total[v] > 12) {
      report.problems.push_back("angles exceed 360 degrees at " + to_string(vertices[v]));
    }
    if (vertex_open[v] == 0) {
      ++report.interior_vertices_checked;
      report.angle_closures.push_back(angle_total[v] == 12);
    }
  }

  // Pairwise crossings and vertex containment.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!boxes[i].overlaps(boxes[j])) continue;
      bool bad = false;
      const Polygon& p = placed[i];
      const Polygon& q = placed[j];
      for (std::size_t a = 0; a < p.size() && !bad; ++a) {
        for (std::size_t b = 0; b < q.size() && !bad; ++b) {
          bad = segments_cross_properly(p[a], p.vertex(a + 1), q[b], q.vertex(b + 1));
        }
      }
      for (std::size_t a = 0; a < p.size() && !bad; ++a) bad = locate_point(p[a], q) == Containment::kInside;
      for (std::size_t b = 0; b < q.size() && !bad; ++b) bad = locate_point(q[b], p) == Containment::kInside;
      if (!bad && p.size() == q.size()) {
        // Identical outlines overlap without crossing.
        std::set<Point, PointLess> ps(p.begin(), p.end());
        bad = std::all_of(q.begin(), q.end(), [&](const Point& x) { return ps.count(x) > 0; });
      }
      if (bad) add_overlap(static_cast<int>(i), static_cast<int>(j));
    }
  }
  report.overlaps.assign(overlap_pairs.begin(), overlap_pairs.end());
  return report;
}

namespace {

struct OutlineLess {
  bool operator()(const std::vector<Point>& a, const std::vector<Point>& b) const {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), PointLess{});
  }
};

std::vector<Point> outline_key(const Polygon& p) {
  std::vector<Point> pts(p.begin(), p.end());
  std::sort(pts.begin(), pts.end(), PointLess{});
  return pts;
}

std::vector<Placement> translated(const std::vector<Placement>& placements, const Vec2& v) {
  std::vector<Placement> out;
  out.reserve(placements.size());
  const Isometry shift = Isometry::translation(v);
  for (const auto& p : placements) out.push_back({p.tile, shift.compose(p.map), p.tile_id});
  return out;
}

}  // namespace

bool translational_closure(const std::vector<Placement>& placements, const Vec2& v1, const Vec2& v2) {
  if (cross(v1, v2).is_zero()) throw DomainError("lattice vectors must be linearly independent");

  std::vector<Placement> combined;
  std::set<std::vector<Point>, OutlineLess> keys;
  auto add = [&](const std::vector<Placement>& ps) {
    std::size_t shared = 0;
    for (const auto& p : ps) {
      if (keys.insert(outline_key(p.placed())).second) {
        combined.push_back(p);
      } else {
        ++shared;
      }
    }
    return shared;
  };
  add(placements);
  const std::size_t shared1 = add(translated(placements, v1));
  const std::size_t shared2 = add(translated(placements, v2));
  if (shared1 == 0 || shared2 == 0) return false;
  return verify_patch(combined).passed();
}

namespace {

std::string compact(const QS3& x) {
  std::string s = to_string(x);
  s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
  return s;
}

}  // namespace

std::string format_placements(const PeriodicPatch& patch, const std::string& header) {
  std::ostringstream out;
  if (!header.empty()) {
    std::istringstream lines(header);
    std::string line;
    while (std::getline(lines, line)) out << "# " << line << "\n";
  }
  out << "# lattice v1 " << compact(patch.v1.x) << " " << compact(patch.v1.y) << "\n";
  out << "# lattice v2 " << compact(patch.v2.x) << " " << compact(patch.v2.y) << "\n";
  for (const auto& p : patch.placements) {
    const Isometry& g = p.map;
    out << compact(g.m00()) << " " << compact(g.m01()) << " " << compact(g.m10()) << " " << compact(g.m11()) << " "
        << compact(g.tx()) << " " << compact(g.ty()) << " " << p.tile_id << " 0\n";
  }
  return out.str();
}

PlacementFixture parse_placements(const std::string& text) {
  PlacementFixture fixture;
  std::map<std::string, Polygon> tiles;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      std::istringstream comment(line.substr(hash + 1));
      std::string word, which, x, y;
      if (comment >> word >> which >> x >> y && word == "lattice" && (which == "v1" || which == "v2")) {
        Vec2 v{parse_qs3(x), parse_qs3(y)};
        (which == "v1" ? fixture.v1 : fixture.v2) = v;
      }
      line.erase(hash);
    }
    std::istringstream fields(line);
    std::vector<std::string> f;
    std::string tok;
    while (fields >> tok) f.push_back(tok);
    if (f.empty()) continue;
    if (f.size() != 8) throw ParseError("placement needs eight fields on line " + std::to_string(line_no), line_no);
    std::array<QS3, 6> v;
    for (std::size_t i = 0; i < 6; ++i) v[i] = parse_qs3(f[i]);
    Isometry map(v[0], v[1], v[2], v[3], v[4], v[5]);
    auto it = tiles.find(f[6]);
    if (it == tiles.end()) it = tiles.emplace(f[6], named_tile(f[6]).normalized).first;
    fixture.placements.push_back({it->second, std::move(map), f[6]});
  }
  return fixture;
}

PlacementFixture read_placements(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open placement fixture '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_placements(buf.str());
}

}  // namespace monotile
