#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "monotile/polygon.hpp"

namespace monotile {

struct Placement {
  Polygon tile;  ///< normalized, counter-clockwise
  Isometry map;  ///< reflections (det = -1) allowed
  std::string tile_id;

  /// Placed outline, re-oriented counter-clockwise.
  Polygon placed() const;
};

/// Result of checking a finite patch for edge matching, vertex angle closure
/// and pairwise overlap.
struct PatchReport {
  std::size_t interior_vertices_checked = 0;
  std::vector<bool> angle_closures;  ///< one per interior vertex
  std::vector<bool> edge_matches;    ///< one per (subdivided) edge
  std::vector<std::pair<int, int>> overlaps;
  std::vector<std::string> problems;

  bool passed() const;
};

/// Checks that every edge (split at every patch vertex lying on it) is either
/// matched by exactly one oppositely-oriented edge of another placement or
/// lies on the outer boundary, that tile angles around every interior vertex
/// sum to 360 degrees, and that no two placements cross or overlap.
PatchReport verify_patch(const std::vector<Placement>& placements);

/// True iff the patch, its translate by v1 and its translate by v2 (exact
/// duplicates merged) still pass verify_patch, and each translate shares at
/// least one placement with the original patch. Throws DomainError when v1
/// and v2 are linearly dependent.
bool translational_closure(const std::vector<Placement>& placements, const Vec2& v1, const Vec2& v2);

/// Periodic patch of a single tile shape together with its lattice vectors.
struct PeriodicPatch {
  std::vector<Placement> placements;
  Vec2 v1;
  Vec2 v2;
  std::size_t tiles_per_unit = 1;
  bool uses_reflection = false;
  std::vector<std::string> transcript;
};

/// Edge-matching search for a lattice tiling by `tile`: a fundamental unit of
/// one tile, or two tiles glued along an edge under any 30-degree rotation or
/// mirror, plus two translation vectors gluing units edge to edge with
/// covolume equal to the unit's area. Returns a 3x3 block of units.
std::optional<PeriodicPatch> find_periodic_patch(const Polygon& tile, const std::string& tile_id,
                                                 std::size_t max_unit = 2);

/// Fixture format: one placement per line as eight fields
/// `m00 m01 m10 m11 tx ty tile_id unused` (QS3 literals without spaces);
/// `# lattice v1 <x> <y>` / `# lattice v2 <x> <y>` record the lattice.
std::string format_placements(const PeriodicPatch& patch, const std::string& header = "");

struct PlacementFixture {
  std::vector<Placement> placements;
  std::optional<Vec2> v1;
  std::optional<Vec2> v2;
};

/// Resolves tile ids through named_tile. Throws ParseError / DomainError
/// (non-orthogonal map).
PlacementFixture parse_placements(const std::string& text);
PlacementFixture read_placements(const std::string& path);

}  // namespace monotile
