#include "monotile/search.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>
#include <unordered_set>

#include "monotile/errors.hpp"
#include "monotile/kite_lattice.hpp"

namespace monotile {

namespace {

bool cyclic_match(const std::vector<int>& a, const std::vector<int>& b) {
  const std::size_t n = a.size();
  if (n != b.size()) return false;
  for (int dir = 0; dir < 2; ++dir) {
    for (std::size_t s = 0; s < n; ++s) {
      bool ok = true;
      for (std::size_t i = 0; i < n && ok; ++i) {
        const std::size_t j = dir == 0 ? (s + i) % n : (s + n - i) % n;
        ok = a[i] == b[j];
      }
      if (ok) return true;
    }
  }
  return false;
}

// Interior angle classes of the outline of a kite set, with straight angles
// merged away, computed on integer ids only. Nullopt unless the outline is a
// single simple-looking cycle.
class OutlineScanner {
 public:
  explicit OutlineScanner(const KiteLattice& lattice) : lattice_(lattice) {}

  std::optional<std::vector<int>> angles(const int* ids, std::size_t count) {
    edges_.clear();
    for (std::size_t i = 0; i < count; ++i) {
      for (const auto& e : lattice_.edges(ids[i])) edges_.push_back(e);
    }
    std::sort(edges_.begin(), edges_.end(), [](const auto& x, const auto& y) { return key(x) < key(y); });

    single_.clear();
    for (std::size_t i = 0; i < edges_.size();) {
      std::size_t j = i;
      while (j < edges_.size() && key(edges_[j]) == key(edges_[i])) ++j;
      if ((j - i) % 2 == 1) single_.push_back(edges_[i]);
      i = j;
    }
    if (single_.size() < 3) return std::nullopt;

    if (slots_.size() < lattice_.vertex_count()) slots_.resize(lattice_.vertex_count(), {-1, -1});
    touched_.clear();
    bool ok = true;
    for (std::size_t i = 0; i < single_.size() && ok; ++i) {
      for (int v : {single_[i].from, single_[i].to}) {
        auto& slot = slots_[static_cast<std::size_t>(v)];
        if (slot[0] < 0 && slot[1] < 0) touched_.push_back(v);
        if (slot[0] < 0) {
          slot[0] = static_cast<int>(i);
        } else if (slot[1] < 0) {
          slot[1] = static_cast<int>(i);
        } else {
          ok = false;
        }
      }
    }
    std::optional<std::vector<int>> result;
    if (ok) result = walk();
    for (int v : touched_) slots_[static_cast<std::size_t>(v)] = {-1, -1};
    return result;
  }

 private:
  static std::uint64_t key(const KiteLattice::Edge& e) {
    const auto lo = static_cast<std::uint64_t>(std::min(e.from, e.to));
    const auto hi = static_cast<std::uint64_t>(std::max(e.from, e.to));
    return lo << 32 | hi;
  }

  std::optional<std::vector<int>> walk() {
    for (int v : touched_) {
      if (slots_[static_cast<std::size_t>(v)][1] < 0) return std::nullopt;
    }
    headings_.clear();
    int edge = 0;
    int at = single_[0].from;
    for (std::size_t steps = 0; steps < single_.size(); ++steps) {
      const auto& e = single_[static_cast<std::size_t>(edge)];
      const bool forward = e.from == at;
      headings_.push_back(forward ? e.heading : (e.heading + 6) % 12);
      at = forward ? e.to : e.from;
      const auto& slot = slots_[static_cast<std::size_t>(at)];
      edge = slot[0] == edge ? slot[1] : slot[0];
      if (steps + 1 < single_.size() && edge == 0) return std::nullopt;  // closed early: several cycles
    }
    if (edge != 0) return std::nullopt;

    const std::size_t m = headings_.size();
    std::vector<int> turns;
    int total = 0;
    for (std::size_t i = 0; i < m; ++i) {
      int t = ((headings_[(i + 1) % m] - headings_[i]) % 12 + 12) % 12;
      if (t > 6) t -= 12;
      if (t == 6) return std::nullopt;
      if (t == 0) continue;
      turns.push_back(t);
      total += t;
    }
    if (total != 12 && total != -12) return std::nullopt;
    std::vector<int> out;
    out.reserve(turns.size());
    for (int t : turns) out.push_back(total > 0 ? 6 - t : 6 + t);
    return out;
  }

  const KiteLattice& lattice_;
  std::vector<KiteLattice::Edge> edges_;
  std::vector<KiteLattice::Edge> single_;
  std::vector<std::array<int, 2>> slots_;
  std::vector<int> touched_;
  std::vector<int> headings_;
};

struct Level {
  std::size_t width = 0;
  std::vector<int> ids;  // flat, `width` sorted ids per state
  std::vector<std::int64_t> parent;
  std::vector<int> fresh;
  std::vector<int> source;

  std::size_t count() const { return width == 0 ? 0 : ids.size() / width; }
  const int* state(std::size_t i) const { return ids.data() + i * width; }
};

struct StateHash {
  const Level* level;
  std::size_t operator()(std::size_t i) const {
    std::size_t h = 1469598103934665603ULL;
    const int* s = level->state(i);
    for (std::size_t k = 0; k < level->width; ++k) h = (h ^ static_cast<std::size_t>(s[k])) * 1099511628211ULL;
    return h;
  }
};

struct StateEq {
  const Level* level;
  bool operator()(std::size_t a, std::size_t b) const {
    return std::equal(level->state(a), level->state(a) + level->width, level->state(b));
  }
};

std::optional<Polygon> normalized_outline(const AssemblySpec& spec) {
  try {
    return normalize_polygon(boundary(assemble(spec)));
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace

SearchReport search_assembly_report(const Signature& target, int n_kites, std::size_t limit) {
  if (n_kites < 1) throw DomainError("search needs at least one kite");
  KiteLattice lattice;
  OutlineScanner scanner(lattice);
  const std::vector<int> target_angles = target.angles();

  std::vector<Level> levels(1);
  levels[0].width = 1;
  levels[0].ids = {KiteLattice::kSeed};
  levels[0].parent = {-1};
  levels[0].fresh = {KiteLattice::kSeed};
  levels[0].source = {-1};
  SearchReport report;
  report.states = 1;

  std::vector<int> scratch;
  for (int size = 2; size <= n_kites; ++size) {
    const Level& prev = levels.back();
    Level next;
    next.width = static_cast<std::size_t>(size);
    std::unordered_set<std::size_t, StateHash, StateEq> seen(1024, StateHash{&next}, StateEq{&next});

    for (std::size_t s = 0; s < prev.count(); ++s) {
      const int* state = prev.state(s);
      for (std::size_t k = 0; k < prev.width; ++k) {
        for (int e = 0; e < 4; ++e) {
          const int nb = lattice.neighbor(state[k], e);
          if (std::binary_search(state, state + prev.width, nb)) continue;
          scratch.assign(state, state + prev.width);
          scratch.insert(std::upper_bound(scratch.begin(), scratch.end(), nb), nb);
          const std::size_t index = next.count();
          next.ids.insert(next.ids.end(), scratch.begin(), scratch.end());
          if (seen.insert(index).second) {
            next.parent.push_back(static_cast<std::int64_t>(s));
            next.fresh.push_back(nb);
            next.source.push_back(state[k]);
            if (++report.states > limit) {
              throw LimitExceeded("search limit of " + std::to_string(limit) + " states exceeded at " +
                                  std::to_string(size) + " kites");
            }
          } else {
            next.ids.resize(next.ids.size() - next.width);
          }
        }
      }
    }
    levels.push_back(std::move(next));
  }

  const Level& last = levels.back();
  for (std::size_t s = 0; s < last.count(); ++s) {
    const auto angles = scanner.angles(last.state(s), last.width);
    if (!angles || !cyclic_match(*angles, target_angles)) continue;

    std::vector<std::pair<int, int>> insertions;
    std::size_t index = s;
    for (std::size_t lv = levels.size() - 1; lv > 0; --lv) {
      insertions.emplace_back(levels[lv].fresh[index], levels[lv].source[index]);
      index = static_cast<std::size_t>(levels[lv].parent[index]);
    }
    std::reverse(insertions.begin(), insertions.end());
    AssemblySpec spec = lattice.replay(insertions);

    const auto outline = normalized_outline(spec);
    if (!outline) continue;
    if (canonical_signature(*outline, target.mode) == target) report.specs.push_back(std::move(spec));
  }
  return report;
}

std::vector<AssemblySpec> cover_assembly(const Polygon& target, int n_kites) {
  if (n_kites < 1) throw DomainError("cover needs at least one kite");
  const Polygon tile = normalize_polygon(target);
  const QS3 kite_area = QS3::sqrt3();
  const auto scale = qs3_sqrt(QS3(n_kites) * kite_area / shoelace_area(tile));
  if (!scale) return {};
  const Polygon shape = scaled(tile, *scale);

  // Lattice neighbourhood covering every placement that contains the seed.
  double diameter = 0;
  for (const Point& p : shape) {
    for (const Point& q : shape) diameter = std::max(diameter, std::sqrt(qs3_to_float(squared_distance(p, q))));
  }
  const long reach = static_cast<long>(std::ceil(diameter)) + 3;
  KiteLattice lattice;
  const std::vector<int> nearby = lattice.grow_to_radius(QS3(reach * reach));
  std::set<Point, PointLess> lattice_vertices;
  for (int id : nearby) {
    for (const auto& e : lattice.edges(id)) lattice_vertices.insert(lattice.vertex(e.from));
  }
  const Point seed_centroid = lattice.centroid(KiteLattice::kSeed);

  std::vector<AssemblySpec> out;
  std::set<std::vector<int>> found;
  for (int mirror = 0; mirror < 2; ++mirror) {
    for (int k = 0; k < 12; ++k) {
      Isometry orient = Isometry::rotation({}, k);
      if (mirror == 1) orient = orient.compose(Isometry(QS3(1), QS3(0), QS3(0), QS3(-1), QS3(0), QS3(0)));
      Polygon oriented = transformed(shape, orient);
      if (mirror == 1) oriented = reversed(oriented);

      for (const Point& anchor : lattice_vertices) {
        const Polygon placed = transformed(oriented, Isometry::translation(anchor - oriented[0]));
        if (locate_point(seed_centroid, placed) != Containment::kInside) continue;
        if (!std::all_of(placed.begin(), placed.end(), [&](const Point& p) { return lattice_vertices.count(p); })) {
          continue;
        }
        std::vector<int> members;
        for (int id : nearby) {
          if (locate_point(lattice.centroid(id), placed) == Containment::kInside) members.push_back(id);
        }
        if (members.size() != static_cast<std::size_t>(n_kites)) continue;
        std::sort(members.begin(), members.end());
        if (found.count(members)) continue;

        const auto spec = lattice.spanning_spec(members);
        if (!spec) continue;
        const auto outline = normalized_outline(*spec);
        if (!outline || outline->size() != placed.size()) continue;
        // Same cycle of vertices, up to the starting point.
        const auto start = std::find(outline->begin(), outline->end(), placed[0]);
        if (start == outline->end()) continue;
        const std::size_t offset = static_cast<std::size_t>(start - outline->begin());
        bool same = true;
        for (std::size_t i = 0; i < placed.size() && same; ++i) same = outline->vertex(offset + i) == placed[i];
        if (!same) continue;

        found.insert(members);
        out.push_back(*spec);
      }
    }
  }
  return out;
}

}  // namespace monotile
