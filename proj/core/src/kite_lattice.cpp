#include "monotile/kite_lattice.hpp"

#include <deque>
#include <set>

#include "monotile/errors.hpp"

namespace monotile {

bool KiteLattice::KeyLess::operator()(const Key& a, const Key& b) const {
  PointLess less;
  if (less(a.first, b.first)) return true;
  if (less(b.first, a.first)) return false;
  return less(a.second, b.second);
}

KiteLattice::KiteLattice() : kite_(laves_kite()) { intern(Isometry::identity()); }

KiteLattice::Key KiteLattice::key_of(const Isometry& placement) const {
  return {placement(kite_.a), placement(kite_.c)};
}

int KiteLattice::vertex_id(const Point& p) {
  auto [it, inserted] = vertex_index_.try_emplace(p, static_cast<int>(vertices_.size()));
  if (inserted) vertices_.push_back(p);
  return it->second;
}

std::optional<int> KiteLattice::find(const Isometry& placement) const {
  const auto it = index_.find(key_of(placement));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> KiteLattice::find_vertex(const Point& p) const {
  const auto it = vertex_index_.find(p);
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

int KiteLattice::intern(const Isometry& placement) {
  Key key = key_of(placement);
  if (const auto it = index_.find(key); it != index_.end()) return it->second;

  const int id = static_cast<int>(kites_.size());
  index_.emplace(std::move(key), id);

  Record rec{placement, {}, {}, {-1, -1, -1, -1}};
  const auto v = kite_.vertices();
  std::array<Point, 4> placed;
  for (std::size_t i = 0; i < 4; ++i) placed[i] = placement(v[i]);
  Point sum;
  for (const Point& p : placed) sum += p;
  rec.centroid = QS3::fraction(1, 4) * sum;
  for (std::size_t i = 0; i < 4; ++i) {
    const Point& p = placed[i];
    const Point& q = placed[(i + 1) % 4];
    const auto heading = heading_class(q - p);
    if (!heading) throw UnsupportedGeometry("kite edge off the 30-degree grid");
    rec.edges[i] = Edge{vertex_id(p), vertex_id(q), *heading, i == 1 || i == 2};
  }
  kites_.push_back(std::move(rec));
  return id;
}

int KiteLattice::neighbor(int id, int edge) {
  if (const int known = kites_[static_cast<std::size_t>(id)].neighbors[static_cast<std::size_t>(edge)]; known >= 0) {
    return known;
  }
  const Isometry g = placement(id);
  const auto [p, q] = kite_edge(g, edge);
  const int nb = intern(Isometry::reflection(Line::through(p, q)).compose(g));
  kites_[static_cast<std::size_t>(id)].neighbors[static_cast<std::size_t>(edge)] = nb;
  return nb;
}

AssemblySpec KiteLattice::replay(const std::vector<std::pair<int, int>>& insertions) {
  AssemblySpec spec;
  std::map<int, std::size_t> order{{kSeed, 0}};
  std::vector<Isometry> actual{Isometry::identity()};
  for (const auto& [fresh, source] : insertions) {
    const std::size_t src_index = order.at(source);
    const Isometry& g = actual[src_index];
    const Key target = key_of(placement(fresh));
    bool found = false;
    for (int e = 0; e < 4 && !found; ++e) {
      const auto [p, q] = kite_edge(g, e);
      Isometry h = Isometry::reflection(Line::through(p, q)).compose(g);
      if (key_of(h) == target) {
        spec.steps.push_back({static_cast<int>(src_index), e});
        order.emplace(fresh, actual.size());
        actual.push_back(std::move(h));
        found = true;
      }
    }
    if (!found) throw Error("replay: kite " + std::to_string(fresh) + " is not adjacent to " + std::to_string(source));
  }
  return spec;
}

std::optional<AssemblySpec> KiteLattice::spanning_spec(const std::vector<int>& ids) {
  const std::set<int> members(ids.begin(), ids.end());
  if (!members.count(kSeed)) return std::nullopt;
  std::set<int> placed{kSeed};
  std::vector<int> queue{kSeed};
  std::vector<std::pair<int, int>> insertions;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int cur = queue[head];
    for (int e = 0; e < 4; ++e) {
      const int nb = neighbor(cur, e);
      if (!members.count(nb) || placed.count(nb)) continue;
      placed.insert(nb);
      queue.push_back(nb);
      insertions.emplace_back(nb, cur);
    }
  }
  if (placed.size() != members.size()) return std::nullopt;
  return replay(insertions);
}

std::vector<int> KiteLattice::grow_to_radius(const QS3& radius2) {
  std::vector<int> inside;
  std::set<int> seen{kSeed};
  std::deque<int> queue{kSeed};
  while (!queue.empty()) {
    const int cur = queue.front();
    queue.pop_front();
    if (squared_length(centroid(cur)) > radius2) continue;
    inside.push_back(cur);
    for (int e = 0; e < 4; ++e) {
      const int nb = neighbor(cur, e);
      if (seen.insert(nb).second) queue.push_back(nb);
    }
  }
  return inside;
}

}  // namespace monotile
