#include "monotile/kite.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "monotile/errors.hpp"

namespace monotile {

Kite laves_kite() {
  const Point a{QS3(0), QS3(0)};
  const Point b{QS3(1), QS3(0)};
  const Point b_prime = rotate_about(b, a, 4);
  const Line ab = Line::through(a, b);
  const Line ab_prime = Line::through(a, b_prime);
  // Two perpendiculars through non-parallel segments always meet.
  const Point c = *line_intersection(ab.perpendicular(b), ab_prime.perpendicular(b_prime));
  return Kite{a, b, c, b_prime};
}

namespace {

const Kite& canonical_kite() {
  static const Kite kite = laves_kite();
  return kite;
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

AssemblySpec parse_assembly_spec(std::istream& in) {
  AssemblySpec spec;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    std::istringstream fields(line);
    AssemblyStep step;
    std::string extra;
    if (!(fields >> step.source >> step.edge) || (fields >> extra)) {
      throw ParseError("expected '<source_kite_index> <edge_index>' on line " + std::to_string(line_no), line_no);
    }
    spec.steps.push_back(step);
  }
  return spec;
}

AssemblySpec parse_assembly_spec(const std::string& text) {
  std::istringstream in(text);
  return parse_assembly_spec(in);
}

AssemblySpec read_assembly_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open assembly spec '" + path + "'");
  return parse_assembly_spec(in);
}

std::string format_assembly_spec(const AssemblySpec& spec, const std::string& header) {
  std::ostringstream out;
  if (!header.empty()) {
    std::istringstream lines(header);
    std::string line;
    while (std::getline(lines, line)) out << "# " << line << "\n";
  }
  for (const auto& step : spec.steps) out << step.source << " " << step.edge << "\n";
  return out.str();
}

Polygon Assembly::kite(std::size_t i) const { return transformed(canonical_kite().polygon(), placements.at(i)); }

std::pair<Point, Point> kite_edge(const Isometry& placement, int edge) {
  const auto v = canonical_kite().vertices();
  return {placement(v[static_cast<std::size_t>(edge)]), placement(v[static_cast<std::size_t>((edge + 1) % 4)])};
}

bool same_kite(const Isometry& g, const Isometry& h) {
  const Kite& k = canonical_kite();
  return g(k.a) == h(k.a) && g(k.c) == h(k.c);
}

Assembly assemble(const AssemblySpec& spec) {
  Assembly out;
  out.provenance = spec;
  out.placements.push_back(Isometry::identity());
  std::vector<Polygon> kites{canonical_kite().polygon()};

  for (std::size_t s = 0; s < spec.steps.size(); ++s) {
    const AssemblyStep& step = spec.steps[s];
    if (step.source < 0 || static_cast<std::size_t>(step.source) >= out.placements.size() || step.edge < 0 ||
        step.edge > 3) {
      throw AssemblyError(AssemblyError::Kind::kBadIndex,
                          "bad index in step " + std::to_string(s) + ": (" + std::to_string(step.source) + ", " +
                              std::to_string(step.edge) + ")");
    }
    const Isometry& source = out.placements[static_cast<std::size_t>(step.source)];
    const auto [p, q] = kite_edge(source, step.edge);
    Isometry placed = Isometry::reflection(Line::through(p, q)).compose(source);

    for (const Isometry& existing : out.placements) {
      if (same_kite(existing, placed)) {
        throw AssemblyError(AssemblyError::Kind::kDuplicateKite, "duplicate kite in step " + std::to_string(s));
      }
    }
    Polygon poly = transformed(canonical_kite().polygon(), placed);
    // Reflections reverse orientation; clipping wants counter-clockwise input.
    if (placed.is_reflection()) poly = reversed(poly);
    for (const Polygon& other : kites) {
      if (convex_overlap_area(poly, other).sign() > 0) {
        throw AssemblyError(AssemblyError::Kind::kOverlap, "overlap in step " + std::to_string(s));
      }
    }
    kites.push_back(std::move(poly));
    out.placements.push_back(std::move(placed));
  }
  return out;
}

Polygon boundary(const Assembly& assembly) {
  if (assembly.placements.empty()) throw DomainError("boundary of an empty assembly");

  using Segment = std::pair<Point, Point>;
  auto seg_less = [](const Segment& a, const Segment& b) {
    PointLess less;
    if (less(a.first, b.first)) return true;
    if (less(b.first, a.first)) return false;
    return less(a.second, b.second);
  };
  std::map<Segment, int, decltype(seg_less)> count(seg_less);
  PointLess less;
  for (const Isometry& g : assembly.placements) {
    for (int e = 0; e < 4; ++e) {
      auto [p, q] = kite_edge(g, e);
      if (less(q, p)) std::swap(p, q);
      ++count[{p, q}];
    }
  }

  std::map<Point, std::vector<Point>, PointLess> adjacency;
  std::size_t edges = 0;
  for (const auto& [seg, c] : count) {
    if (c % 2 == 0) continue;
    adjacency[seg.first].push_back(seg.second);
    adjacency[seg.second].push_back(seg.first);
    ++edges;
  }
  for (const auto& [v, nbrs] : adjacency) {
    if (nbrs.size() % 2 == 1) throw AssemblyError(AssemblyError::Kind::kOpenChain, "open chain at " + to_string(v));
    if (nbrs.size() != 2) {
      throw AssemblyError(AssemblyError::Kind::kDisconnectedBoundary, "boundary pinches at " + to_string(v));
    }
  }

  const Point start = adjacency.begin()->first;
  std::vector<Point> cycle{start};
  Point prev = start;
  Point cur = adjacency.begin()->second[0];
  while (!(cur == start)) {
    cycle.push_back(cur);
    const auto& nbrs = adjacency.at(cur);
    Point next = nbrs[0] == prev ? nbrs[1] : nbrs[0];
    prev = std::move(cur);
    cur = std::move(next);
  }
  if (cycle.size() != edges) {
    throw AssemblyError(AssemblyError::Kind::kDisconnectedBoundary, "boundary has more than one cycle");
  }
  Polygon poly(std::move(cycle));
  return shoelace_area(poly).sign() < 0 ? reversed(poly) : poly;
}

std::vector<std::pair<Point, Point>> placement_set(const Assembly& assembly) {
  const Kite& k = canonical_kite();
  std::vector<std::pair<Point, Point>> keys;
  for (const Isometry& g : assembly.placements) keys.emplace_back(g(k.a), g(k.c));
  PointLess less;
  std::sort(keys.begin(), keys.end(), [&](const auto& x, const auto& y) {
    if (less(x.first, y.first)) return true;
    if (less(y.first, x.first)) return false;
    return less(x.second, y.second);
  });
  return keys;
}

}  // namespace monotile
