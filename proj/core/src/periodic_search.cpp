#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "monotile/errors.hpp"
#include "monotile/tiling.hpp"

namespace monotile {

namespace {

// Rotations first, then mirror images.
std::vector<Isometry> orientations() {
  std::vector<Isometry> out;
  const Point origin{QS3(0), QS3(0)};
  const Isometry mirror = Isometry::reflection(Line(origin, {QS3(1), QS3(0)}));
  for (int k = 0; k < 12; ++k) out.push_back(Isometry::rotation(origin, k));
  for (int k = 0; k < 12; ++k) out.push_back(Isometry::rotation(origin, k).compose(mirror));
  return out;
}

std::vector<Placement> block(const std::vector<Placement>& unit, const Vec2& v1, const Vec2& v2, int reach) {
  std::vector<Placement> out;
  for (int i = -reach; i <= reach; ++i) {
    for (int j = -reach; j <= reach; ++j) {
      const Isometry shift = Isometry::translation(QS3(i) * v1 + QS3(j) * v2);
      for (const auto& p : unit) out.push_back({p.tile, shift.compose(p.map), p.tile_id});
    }
  }
  return out;
}

// Translations carrying a vertex of the unit onto another of its vertices,
// one representative per +/- pair.
std::vector<Vec2> candidate_translations(const std::vector<Placement>& unit) {
  std::set<Point, PointLess> points;
  for (const auto& p : unit) {
    for (const Point& v : p.placed()) points.insert(v);
  }
  std::set<Vec2, PointLess> seen;
  std::vector<Vec2> out;
  for (const Point& a : points) {
    for (const Point& b : points) {
      if (a == b) continue;
      const Vec2 d = b - a;
      if (seen.count(-d) || !seen.insert(d).second) continue;
      out.push_back(d);
    }
  }
  std::sort(out.begin(), out.end(), [](const Vec2& u, const Vec2& v) {
    const QS3 lu = squared_length(u);
    const QS3 lv = squared_length(v);
    return lu != lv ? lu < lv : PointLess{}(u, v);
  });
  return out;
}

bool share_segment(const Polygon& p, const Polygon& q) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Point& a = p[i];
    const Point& b = p.vertex(i + 1);
    for (std::size_t j = 0; j < q.size(); ++j) {
      const Point& c = q[j];
      const Point& d = q.vertex(j + 1);
      if (orient(a, b, c) != 0 || orient(a, b, d) != 0) continue;
      // Collinear: overlap of positive length along ab.
      const Vec2 u = b - a;
      QS3 lo = dot(c - a, u);
      QS3 hi = dot(d - a, u);
      if (hi < lo) std::swap(lo, hi);
      const QS3 top = std::min(hi, dot(u, u));
      const QS3 bottom = std::max(lo, QS3(0));
      if (bottom < top) return true;
    }
  }
  return false;
}

bool edge_connected(const std::vector<Placement>& placements) {
  std::vector<Polygon> placed;
  for (const auto& p : placements) placed.push_back(p.placed());
  std::vector<bool> seen(placed.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const std::size_t i = stack.back();
    stack.pop_back();
    for (std::size_t j = 0; j < placed.size(); ++j) {
      if (seen[j] || !share_segment(placed[i], placed[j])) continue;
      seen[j] = true;
      ++count;
      stack.push_back(j);
    }
  }
  return count == placed.size();
}

struct LatticeHit {
  Vec2 v1;
  Vec2 v2;
};

std::optional<LatticeHit> find_lattice(const std::vector<Placement>& unit, const QS3& unit_area,
                                       std::vector<std::string>& transcript, const std::string& label) {
  const auto candidates = candidate_translations(unit);
  // The unit and one translate of it must already be compatible; w and -w
  // give congruent pairs.
  std::map<Vec2, bool, PointLess> pair_ok;
  auto compatible = [&](Vec2 w) {
    if (w.x.sign() < 0 || (w.x.is_zero() && w.y.sign() < 0)) w = -w;
    auto it = pair_ok.find(w);
    if (it == pair_ok.end()) {
      std::vector<Placement> two = unit;
      const Isometry shift = Isometry::translation(w);
      for (const auto& p : unit) two.push_back({p.tile, shift.compose(p.map), p.tile_id});
      it = pair_ok.emplace(w, verify_patch(two).passed()).first;
    }
    return it->second;
  };
  std::size_t tried = 0;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    for (std::size_t j = i + 1; j < candidates.size(); ++j) {
      QS3 covolume = cross(candidates[i], candidates[j]);
      if (covolume.sign() < 0) covolume = -covolume;
      if (covolume != unit_area) continue;
      ++tried;
      const Vec2& a = candidates[i];
      const Vec2& b = candidates[j];
      if (!compatible(a) || !compatible(b) || !compatible(a + b) || !compatible(a - b)) continue;
      if (!verify_patch(block(unit, candidates[i], candidates[j], 1)).passed()) continue;
      if (!verify_patch(block(unit, candidates[i], candidates[j], 2)).passed()) continue;
      transcript.push_back(label + ": " + std::to_string(candidates.size()) + " translations, " +
                           std::to_string(tried) + " lattice pairs tried, accepted v1 = " + to_string(candidates[i]) +
                           ", v2 = " + to_string(candidates[j]));
      return LatticeHit{candidates[i], candidates[j]};
    }
  }
  if (tried > 0) {
    transcript.push_back(label + ": " + std::to_string(candidates.size()) + " translations, " + std::to_string(tried) +
                         " lattice pairs tried, none tile");
  }
  return std::nullopt;
}

}  // namespace

std::optional<PeriodicPatch> find_periodic_patch(const Polygon& tile, const std::string& tile_id,
                                                 std::size_t max_unit) {
  if (max_unit < 1 || max_unit > 2) throw DomainError("fundamental units of 1 or 2 tiles are supported");
  const QS3 area = shoelace_area(tile);
  std::vector<std::string> transcript;
  const Placement seed{tile, Isometry::identity(), tile_id};

  auto finish = [&](std::vector<Placement> unit, LatticeHit hit) {
    // Same lattice, other bases: keep the first whose block is edge-connected.
    const Vec2 a = hit.v1;
    const Vec2 b = hit.v2;
    for (const auto& [u, v] : {std::pair{a, b}, std::pair{a, b + a}, std::pair{a, b - a}, std::pair{a + b, b},
                               std::pair{a - b, b}}) {
      if (edge_connected(block(unit, u, v, 1))) {
        hit = {u, v};
        break;
      }
    }
    PeriodicPatch patch;
    patch.placements = block(unit, hit.v1, hit.v2, 1);
    patch.v1 = hit.v1;
    patch.v2 = hit.v2;
    patch.tiles_per_unit = unit.size();
    patch.uses_reflection = std::any_of(unit.begin(), unit.end(), [](const Placement& p) { return p.map.is_reflection(); });
    patch.transcript = std::move(transcript);
    return patch;
  };

  if (auto hit = find_lattice({seed}, area, transcript, "unit of 1 tile")) return finish({seed}, *hit);
  transcript.push_back("unit of 1 tile: no lattice tiling");
  if (max_unit < 2) return std::nullopt;

  const Polygon& base = tile;
  const auto orients = orientations();
  std::size_t units = 0;
  for (std::size_t o = 0; o < orients.size(); ++o) {
    const Polygon copy = Placement{tile, orients[o], tile_id}.placed();
    for (std::size_t i = 0; i < base.size(); ++i) {
      for (std::size_t j = 0; j < copy.size(); ++j) {
        // Glue copy edge j onto base edge i with opposite orientation.
        if (copy.edge(j) != -base.edge(i)) continue;
        const Vec2 shift = base.vertex(i + 1) - copy.vertex(j);
        Placement second{tile, Isometry::translation(shift).compose(orients[o]), tile_id};
        std::vector<Placement> unit{seed, second};
        if (!verify_patch(unit).passed()) continue;
        ++units;
        std::ostringstream label;
        label << "unit of 2 tiles (orientation " << (o < 12 ? "rot " : "mirror rot ") << (o % 12) * 30
              << ", base edge " << i << ", copy edge " << j << ")";
        if (auto hit = find_lattice(unit, QS3(2) * area, transcript, label.str())) {
          return finish(std::move(unit), *hit);
        }
      }
    }
  }
  transcript.push_back("units of 2 tiles: " + std::to_string(units) + " gluings, no lattice tiling");
  return std::nullopt;
}

}  // namespace monotile
