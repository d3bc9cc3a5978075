#pragma once

#include <optional>
#include <vector>

#include "monotile/geom.hpp"

namespace monotile {

/// Closed polygon; the last vertex connects back to the first.
class Polygon {
 public:
  Polygon() = default;
  /// Throws DomainError for fewer than three vertices.
  explicit Polygon(std::vector<Point> vertices);

  std::size_t size() const { return vertices_.size(); }
  const Point& operator[](std::size_t i) const { return vertices_[i]; }
  const Point& vertex(std::size_t i) const { return vertices_[i % vertices_.size()]; }
  const std::vector<Point>& vertices() const { return vertices_; }

  /// Vector of edge i, from vertex i to vertex i+1.
  Vec2 edge(std::size_t i) const { return vertex(i + 1) - vertex(i); }

  auto begin() const { return vertices_.begin(); }
  auto end() const { return vertices_.end(); }

  friend bool operator==(const Polygon&, const Polygon&) = default;

 private:
  std::vector<Point> vertices_;
};

/// Signed area; positive iff counter-clockwise.
QS3 shoelace_area(const Polygon& poly);

/// Squared edge lengths in traversal order.
std::vector<QS3> squared_edge_lengths(const Polygon& poly);

/// Interior angle classes (multiples of 30 degrees) for a counter-clockwise
/// polygon; entry i is the angle at vertex i. Nullopt for any vertex that
/// does not classify. Throws DomainError on zero-length edges.
std::optional<std::vector<int>> interior_angle_classes(const Polygon& poly);

/// True iff non-adjacent edges are disjoint and adjacent edges meet only at
/// their shared vertex.
bool is_simple(const Polygon& poly);

/// Removes zero-length edges, merges collinear runs, orients counter-clockwise.
/// Throws DegeneratePolygon when fewer than three vertices survive.
Polygon normalize_polygon(const Polygon& poly);

Polygon reversed(const Polygon& poly);
Polygon transformed(const Polygon& poly, const Isometry& g);
Polygon scaled(const Polygon& poly, const QS3& factor);

/// Segment predicates with exact arithmetic.
bool on_segment(const Point& p, const Point& a, const Point& b);
/// p lies on segment ab but is neither endpoint.
bool strictly_inside_segment(const Point& p, const Point& a, const Point& b);
bool segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d);
/// Segments cross at a single point interior to both.
bool segments_cross_properly(const Point& a, const Point& b, const Point& c, const Point& d);

enum class Containment { kOutside, kBoundary, kInside };
Containment locate_point(const Point& p, const Polygon& poly);

/// Intersection of two convex counter-clockwise polygons (may be empty).
std::vector<Point> convex_intersection(const Polygon& a, const Polygon& b);
/// Exact area of the intersection of two convex counter-clockwise polygons.
QS3 convex_overlap_area(const Polygon& a, const Polygon& b);

/// Vertex average.
Point centroid(const Polygon& poly);

}  // namespace monotile
