#pragma once

#include <utility>
#include <vector>

#include "monotile/polygon.hpp"

namespace monotile {

/// Finite piece of an edge-to-edge tessellation by regular polygons.
struct Patch {
  std::vector<Polygon> faces;                     ///< counter-clockwise
  std::vector<std::pair<int, int>> adjacency;     ///< faces sharing a full edge
  std::vector<Point> vertices;                    ///< deduplicated
  std::vector<std::vector<int>> incident;         ///< faces around each vertex

  /// Vertices whose incident faces close a full 360-degree fan.
  std::vector<int> interior_vertices() const;
  /// Incident faces of vertex `v`, sorted counter-clockwise by direction.
  std::vector<int> fan(int v) const;
  /// Face sizes around `v`, in fan order.
  std::vector<int> fan_sizes(int v) const;
};

/// Indexes vertices, incidences and shared-edge adjacency of `faces`.
Patch make_patch(std::vector<Polygon> faces);

/// Unit equilateral triangles (3.3.3.3.3.3) whose centroids lie within
/// distance `radius` of the origin. radius in [1, 6].
Patch triangular_patch(int radius);

/// Semiregular (3.4.6.4) tessellation with unit sides: hexagons within
/// hexagon-lattice distance radius-1 of the origin, a square on every hexagon
/// edge and a triangle at every hexagon vertex. radius in [1, 4].
Patch patch_3464(int radius);

/// Center of the unit square erected outward on edge ab of a face centered at
/// `face_center`.
Point square_center_on_edge(const Point& a, const Point& b, const Point& face_center);

struct DualPatch {
  std::vector<Polygon> faces;
  std::vector<int> base_vertices;  ///< base vertex each dual face surrounds
};

/// Dual (Laves) faces: for each interior vertex, the centroids of its incident
/// faces in fan order. Throws DomainError when there is no interior vertex.
DualPatch dual(const Patch& patch);

}  // namespace monotile
