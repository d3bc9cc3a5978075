#pragma once

#include <array>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "monotile/kite.hpp"

namespace monotile {

/// Interned view of the Laves kite tiling reachable from the canonical kite by
/// edge reflections. Every kite gets a small integer id (the seed is 0), and
/// each kite's edges carry integer vertex ids so that set-level work (search
/// frontiers, boundary extraction) runs on integers; exact geometry is only
/// computed once per kite.
class KiteLattice {
 public:
  struct Edge {
    int from = 0;       ///< vertex id, in labeled order of the representative
    int to = 0;         ///< vertex id
    int heading = 0;    ///< heading class of from->to (k*30 degrees)
    bool long_side = false;  ///< sqrt3 side (B-C, C-B') vs unit side
  };

  KiteLattice();

  static constexpr int kSeed = 0;

  std::size_t size() const { return kites_.size(); }

  /// Representative placement of kite `id`.
  const Isometry& placement(int id) const { return kites_[static_cast<std::size_t>(id)].placement; }
  const std::array<Edge, 4>& edges(int id) const { return kites_[static_cast<std::size_t>(id)].edges; }
  const Point& vertex(int vid) const { return vertices_[static_cast<std::size_t>(vid)]; }
  std::size_t vertex_count() const { return vertices_.size(); }
  const Point& centroid(int id) const { return kites_[static_cast<std::size_t>(id)].centroid; }

  /// Kite across edge `edge` of the representative placement (created on demand).
  int neighbor(int id, int edge);

  /// Id of the kite covered by `placement`, creating it if new. The placement
  /// must be an image of the canonical kite lying in the tiling.
  int intern(const Isometry& placement);
  std::optional<int> find(const Isometry& placement) const;
  std::optional<int> find_vertex(const Point& p) const;

  /// Reflection steps to build the kite set `ids` from the seed, in
  /// breadth-first order over shared edges. Nullopt when the set does not
  /// contain the seed or is not edge-connected.
  std::optional<AssemblySpec> spanning_spec(const std::vector<int>& ids);

  /// Replays a sequence of (new kite, source kite) insertions as a spec whose
  /// edge indices refer to the placements produced by `assemble`.
  AssemblySpec replay(const std::vector<std::pair<int, int>>& insertions);

  /// Expands the lattice until it holds every kite whose centroid lies within
  /// squared distance `radius2` of the origin (and returns their ids).
  std::vector<int> grow_to_radius(const QS3& radius2);

 private:
  struct Record {
    Isometry placement;
    Point centroid;
    std::array<Edge, 4> edges;
    std::array<int, 4> neighbors{-1, -1, -1, -1};
  };

  using Key = std::pair<Point, Point>;
  struct KeyLess {
    bool operator()(const Key& a, const Key& b) const;
  };

  Key key_of(const Isometry& placement) const;
  int vertex_id(const Point& p);

  Kite kite_;
  std::vector<Record> kites_;
  std::map<Key, int, KeyLess> index_;
  std::vector<Point> vertices_;
  std::map<Point, int, PointLess> vertex_index_;
};

}  // namespace monotile
