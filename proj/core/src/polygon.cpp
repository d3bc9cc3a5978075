#include "monotile/polygon.hpp"

#include <algorithm>

#include "monotile/errors.hpp"

namespace monotile {

Polygon::Polygon(std::vector<Point> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.size() < 3) throw DegeneratePolygon();
}

QS3 shoelace_area(const Polygon& poly) {
  QS3 twice;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) twice += cross(poly[i], poly.vertex(i + 1));
  return twice * QS3::fraction(1, 2);
}

std::vector<QS3> squared_edge_lengths(const Polygon& poly) {
  std::vector<QS3> out;
  out.reserve(poly.size());
  for (std::size_t i = 0; i < poly.size(); ++i) out.push_back(squared_length(poly.edge(i)));
  return out;
}

std::optional<std::vector<int>> interior_angle_classes(const Polygon& poly) {
  const std::size_t n = poly.size();
  std::vector<int> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Point& v = poly[i];
    const Vec2 to_next = poly.vertex(i + 1) - v;
    const Vec2 to_prev = poly.vertex(i + n - 1) - v;
    const auto k = angle_class(to_next, to_prev);
    if (!k) return std::nullopt;
    out[i] = *k;
  }
  return out;
}

bool on_segment(const Point& p, const Point& a, const Point& b) {
  if (orient(a, b, p) != 0) return false;
  return dot(p - a, p - b).sign() <= 0;
}

bool strictly_inside_segment(const Point& p, const Point& a, const Point& b) {
  if (orient(a, b, p) != 0) return false;
  return dot(p - a, p - b).sign() < 0;
}

bool segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d) {
  const int o1 = orient(a, b, c);
  const int o2 = orient(a, b, d);
  const int o3 = orient(c, d, a);
  const int o4 = orient(c, d, b);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  return on_segment(c, a, b) || on_segment(d, a, b) || on_segment(a, c, d) || on_segment(b, c, d);
}

bool segments_cross_properly(const Point& a, const Point& b, const Point& c, const Point& d) {
  const int o1 = orient(a, b, c);
  const int o2 = orient(a, b, d);
  const int o3 = orient(c, d, a);
  const int o4 = orient(c, d, b);
  return o1 * o2 < 0 && o3 * o4 < 0;
}

bool is_simple(const Polygon& poly) {
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (poly[i] == poly.vertex(i + 1)) return false;
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = poly[i];
    const Point& b = poly.vertex(i + 1);
    for (std::size_t j = i + 1; j < n; ++j) {
      const Point& c = poly[j];
      const Point& d = poly.vertex(j + 1);
      if (j == i + 1) {
        // a-b-d around shared vertex b: d must not fall back onto ab.
        if (on_segment(d, a, b) || on_segment(a, c, d)) return false;
      } else if (i == 0 && j == n - 1) {
        // c-d(=a)-b around shared vertex a.
        if (on_segment(c, a, b) || on_segment(b, c, d)) return false;
      } else if (segments_intersect(a, b, c, d)) {
        return false;
      }
    }
  }
  return true;
}

Polygon reversed(const Polygon& poly) {
  std::vector<Point> v(poly.vertices());
  std::reverse(v.begin() + 1, v.end());
  return Polygon(std::move(v));
}

Polygon normalize_polygon(const Polygon& poly) {
  std::vector<Point> v = poly.vertices();
  bool changed = true;
  while (changed && v.size() >= 3) {
    changed = false;
    // Zero-length edges.
    for (std::size_t i = 0; i < v.size() && v.size() >= 2;) {
      if (v[i] == v[(i + 1) % v.size()]) {
        v.erase(v.begin() + static_cast<std::ptrdiff_t>((i + 1) % v.size()));
        changed = true;
      } else {
        ++i;
      }
    }
    if (v.size() < 3) break;
    // Collinear runs (straight angles and zero-area spikes).
    for (std::size_t i = 0; i < v.size() && v.size() >= 3;) {
      const std::size_t n = v.size();
      if (orient(v[(i + n - 1) % n], v[i], v[(i + 1) % n]) == 0) {
        v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
      } else {
        ++i;
      }
    }
  }
  if (v.size() < 3) throw DegeneratePolygon();
  Polygon out(std::move(v));
  const int s = shoelace_area(out).sign();
  if (s == 0) throw DegeneratePolygon();
  return s > 0 ? out : reversed(out);
}

Polygon transformed(const Polygon& poly, const Isometry& g) {
  std::vector<Point> v;
  v.reserve(poly.size());
  for (const Point& p : poly) v.push_back(g(p));
  return Polygon(std::move(v));
}

Polygon scaled(const Polygon& poly, const QS3& factor) {
  std::vector<Point> v;
  v.reserve(poly.size());
  for (const Point& p : poly) v.push_back(factor * p);
  return Polygon(std::move(v));
}

Containment locate_point(const Point& p, const Polygon& poly) {
  const std::size_t n = poly.size();
  int winding = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = poly[i];
    const Point& b = poly.vertex(i + 1);
    if (on_segment(p, a, b)) return Containment::kBoundary;
    const bool a_below = a.y <= p.y;
    const bool b_below = b.y <= p.y;
    if (a_below && !b_below) {
      if (orient(a, b, p) > 0) ++winding;
    } else if (!a_below && b_below) {
      if (orient(a, b, p) < 0) --winding;
    }
  }
  return winding != 0 ? Containment::kInside : Containment::kOutside;
}

std::vector<Point> convex_intersection(const Polygon& a, const Polygon& b) {
  std::vector<Point> subject = a.vertices();
  const std::size_t m = b.size();
  for (std::size_t j = 0; j < m && !subject.empty(); ++j) {
    const Point& c = b[j];
    const Point& d = b.vertex(j + 1);
    std::vector<Point> clipped;
    const std::size_t n = subject.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Point& p = subject[i];
      const Point& q = subject[(i + 1) % n];
      const int sp = orient(c, d, p);
      const int sq = orient(c, d, q);
      if (sp >= 0) clipped.push_back(p);
      if (sp * sq < 0) {
        // Crossing of pq with the clip line cd.
        const QS3 t = cross(c - p, d - c) / cross(q - p, d - c);
        clipped.push_back(p + t * (q - p));
      }
    }
    subject = std::move(clipped);
  }
  return subject;
}

QS3 convex_overlap_area(const Polygon& a, const Polygon& b) {
  const std::vector<Point> pts = convex_intersection(a, b);
  if (pts.size() < 3) return QS3(0);
  QS3 twice;
  for (std::size_t i = 0; i < pts.size(); ++i) twice += cross(pts[i], pts[(i + 1) % pts.size()]);
  return twice * QS3::fraction(1, 2);
}

Point centroid(const Polygon& poly) {
  Point sum;
  for (const Point& p : poly) sum += p;
  return QS3(Rational(1, static_cast<long>(poly.size()))) * sum;
}

}  // namespace monotile
