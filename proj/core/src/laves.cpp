#include "monotile/laves.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

#include "monotile/errors.hpp"

namespace monotile {

namespace {

// Half-plane index for angular sorting: 0 for [0, 180), 1 for [180, 360).
int half(const Vec2& v) {
  const int sy = v.y.sign();
  return (sy > 0 || (sy == 0 && v.x.sign() > 0)) ? 0 : 1;
}

bool angular_less(const Vec2& u, const Vec2& v) {
  const int hu = half(u);
  const int hv = half(v);
  if (hu != hv) return hu < hv;
  return cross(u, v).sign() > 0;
}

int interior_class_at(const Polygon& face, const Point& v) {
  for (std::size_t i = 0; i < face.size(); ++i) {
    if (face[i] == v) {
      const auto k = angle_class(face.vertex(i + 1) - v, face.vertex(i + face.size() - 1) - v);
      if (!k) throw UnsupportedGeometry("face angle is not a multiple of 30 degrees");
      return *k;
    }
  }
  return 0;
}

}  // namespace

Patch make_patch(std::vector<Polygon> faces) {
  Patch patch;
  std::map<Point, int, PointLess> index;
  std::map<std::pair<int, int>, std::vector<int>> edge_faces;
  for (Polygon& f : faces) f = normalize_polygon(f);
  for (std::size_t fi = 0; fi < faces.size(); ++fi) {
    const Polygon& f = faces[fi];
    std::vector<int> ids;
    for (const Point& p : f) {
      auto [it, inserted] = index.try_emplace(p, static_cast<int>(patch.vertices.size()));
      if (inserted) {
        patch.vertices.push_back(p);
        patch.incident.emplace_back();
      }
      ids.push_back(it->second);
      patch.incident[static_cast<std::size_t>(it->second)].push_back(static_cast<int>(fi));
    }
    for (std::size_t i = 0; i < ids.size(); ++i) {
      const int a = ids[i];
      const int b = ids[(i + 1) % ids.size()];
      edge_faces[{std::min(a, b), std::max(a, b)}].push_back(static_cast<int>(fi));
    }
  }
  std::set<std::pair<int, int>> pairs;
  for (const auto& [edge, fs] : edge_faces) {
    for (std::size_t i = 0; i < fs.size(); ++i) {
      for (std::size_t j = i + 1; j < fs.size(); ++j) pairs.insert({std::min(fs[i], fs[j]), std::max(fs[i], fs[j])});
    }
  }
  patch.adjacency.assign(pairs.begin(), pairs.end());
  patch.faces = std::move(faces);
  return patch;
}

std::vector<int> Patch::interior_vertices() const {
  std::vector<int> out;
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    int total = 0;
    for (int f : incident[v]) total += interior_class_at(faces[static_cast<std::size_t>(f)], vertices[v]);
    if (total == 12) out.push_back(static_cast<int>(v));
  }
  return out;
}

std::vector<int> Patch::fan(int v) const {
  const Point& center = vertices[static_cast<std::size_t>(v)];
  std::vector<int> order = incident[static_cast<std::size_t>(v)];
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return angular_less(centroid(faces[static_cast<std::size_t>(a)]) - center,
                        centroid(faces[static_cast<std::size_t>(b)]) - center);
  });
  return order;
}

std::vector<int> Patch::fan_sizes(int v) const {
  std::vector<int> sizes;
  for (int f : fan(v)) sizes.push_back(static_cast<int>(faces[static_cast<std::size_t>(f)].size()));
  return sizes;
}

Patch triangular_patch(int radius) {
  if (radius < 1 || radius > 6) throw DomainError("triangular patch radius must be in [1, 6]");
  const Vec2 e1{QS3(1), QS3(0)};
  const Vec2 e2 = unit_direction(2);
  auto lattice = [&](int i, int j) { return QS3(i) * e1 + QS3(j) * e2; };
  const QS3 r2(radius * radius);

  std::vector<Polygon> faces;
  const int span = 2 * radius + 2;
  for (int j = -span; j <= span; ++j) {
    for (int i = -span; i <= span; ++i) {
      Polygon up({lattice(i, j), lattice(i + 1, j), lattice(i, j + 1)});
      Polygon down({lattice(i + 1, j), lattice(i + 1, j + 1), lattice(i, j + 1)});
      for (Polygon* t : {&up, &down}) {
        if (squared_length(centroid(*t)) <= r2) faces.push_back(std::move(*t));
      }
    }
  }
  return make_patch(std::move(faces));
}

Point square_center_on_edge(const Point& a, const Point& b, const Point& face_center) {
  const Point mid = QS3::fraction(1, 2) * (a + b);
  Vec2 normal = rotate_vector(b - a, 3);
  if (dot(normal, mid - face_center).sign() < 0) normal = -normal;
  // Unit edges: the half normal reaches the square's center.
  return mid + QS3::fraction(1, 2) * normal;
}

Patch patch_3464(int radius) {
  if (radius < 1 || radius > 4) throw DomainError("(3.4.6.4) patch radius must be in [1, 4]");
  // Neighbouring hexagon centers are one apothem pair plus a square apart.
  const QS3 spacing = QS3(1) + QS3::sqrt3();
  const Vec2 u = spacing * unit_direction(0);
  const Vec2 v = spacing * unit_direction(2);

  std::vector<Polygon> faces;
  std::set<Point, PointLess> seen_centers;
  auto add_face = [&](Polygon p) {
    if (seen_centers.insert(centroid(p)).second) faces.push_back(std::move(p));
  };

  const int reach = radius - 1;
  for (int n = -reach; n <= reach; ++n) {
    for (int m = -reach; m <= reach; ++m) {
      if (std::abs(m + n) > reach) continue;
      const Point c = QS3(m) * u + QS3(n) * v;
      std::vector<Point> hex;
      for (int k = 0; k < 6; ++k) hex.push_back(c + unit_direction(3 + 2 * k));
      add_face(Polygon(hex));
      for (int k = 0; k < 6; ++k) {
        const Point& p = hex[static_cast<std::size_t>(k)];
        const Point& q = hex[static_cast<std::size_t>((k + 1) % 6)];
        const Vec2 out = rotate_vector(q - p, -3);
        add_face(normalize_polygon(Polygon({p, q, q + out, p + out})));
        const Point& prev = hex[static_cast<std::size_t>((k + 5) % 6)];
        const Vec2 out_prev = rotate_vector(p - prev, -3);
        add_face(normalize_polygon(Polygon({p, p + out_prev, p + out})));
      }
    }
  }
  return make_patch(std::move(faces));
}

DualPatch dual(const Patch& patch) {
  DualPatch out;
  for (int v : patch.interior_vertices()) {
    std::vector<Point> ring;
    for (int f : patch.fan(v)) ring.push_back(centroid(patch.faces[static_cast<std::size_t>(f)]));
    out.faces.push_back(normalize_polygon(Polygon(std::move(ring))));
    out.base_vertices.push_back(v);
  }
  if (out.faces.empty()) throw DomainError("patch has no interior vertex");
  return out;
}

}  // namespace monotile
