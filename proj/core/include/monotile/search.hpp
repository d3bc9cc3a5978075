#pragma once

#include <cstddef>
#include <vector>

#include "monotile/kite.hpp"
#include "monotile/signature.hpp"

namespace monotile {

struct SearchReport {
  std::vector<AssemblySpec> specs;
  /// Distinct placement sets visited over all levels.
  std::size_t states = 0;
};

/// Breadth-first enumeration of edge-connected kite sets that contain the
/// seed kite, deduplicated by placement set. Returns (in deterministic
/// discovery order) one spec per n-kite set whose normalized outline matches
/// `target` (similarity or congruence, per target.mode). Throws LimitExceeded
/// once more than `limit` states have been generated.
SearchReport search_assembly_report(const Signature& target, int n_kites, std::size_t limit);

inline std::vector<AssemblySpec> search_assembly(const Signature& target, int n_kites, std::size_t limit) {
  return search_assembly_report(target, n_kites, limit).specs;
}

/// Target-guided alternative for large kite counts: scales `target` so its
/// area equals n_kites kites, tries every 30-degree orientation (and mirror)
/// anchored on tiling vertices, and keeps the placements that are exactly a
/// union of n_kites tiling kites containing the seed. Empty when the
/// required scale is not in Q[sqrt3] or nothing fits.
std::vector<AssemblySpec> cover_assembly(const Polygon& target, int n_kites);

}  // namespace monotile
