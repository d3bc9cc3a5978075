#pragma once

#include <array>
#include <istream>
#include <string>
#include <vector>

#include "monotile/polygon.hpp"

namespace monotile {

/// Laves kite with labeled vertices A, B, C, B' (in that order).
///
/// |AB| = |AB'| = 1, |BC| = |B'C| = sqrt3; angles 120, 90, 60, 90 degrees.
struct Kite {
  Point a, b, c, b_prime;

  Polygon polygon() const { return Polygon({a, b, c, b_prime}); }
  std::array<Point, 4> vertices() const { return {a, b, c, b_prime}; }
};

/// Replays the ruler-and-compass construction from A=(0,0), B=(1,0):
/// B' is B rotated 120 degrees about A, and C is where the perpendiculars to
/// AB at B and to AB' at B' meet.
Kite laves_kite();

/// One reflection step: mirror kite `source` across its edge `edge`, where
/// edge i joins labeled vertex i to vertex i+1 (mod 4) in order A, B, C, B'.
struct AssemblyStep {
  int source = 0;
  int edge = 0;

  friend bool operator==(const AssemblyStep&, const AssemblyStep&) = default;
};

struct AssemblySpec {
  std::vector<AssemblyStep> steps;

  std::size_t kite_count() const { return steps.size() + 1; }

  friend bool operator==(const AssemblySpec&, const AssemblySpec&) = default;
};

/// Plain text, one `<source_kite_index> <edge_index>` per line; `#` starts a
/// comment and blank lines are ignored. Throws ParseError with the line number.
AssemblySpec parse_assembly_spec(std::istream& in);
AssemblySpec parse_assembly_spec(const std::string& text);
AssemblySpec read_assembly_spec(const std::string& path);
std::string format_assembly_spec(const AssemblySpec& spec, const std::string& header = "");

/// Kite placements (images of the canonical kite) plus the steps that made them.
struct Assembly {
  std::vector<Isometry> placements;
  AssemblySpec provenance;

  std::size_t size() const { return placements.size(); }
  Polygon kite(std::size_t i) const;
};

/// Placed kite i of `placement`; edge index as in AssemblyStep.
std::pair<Point, Point> kite_edge(const Isometry& placement, int edge);

/// Two placements of the same kite shape coincide iff they map A and C to the
/// same points (the kite's mirror axis is AC).
bool same_kite(const Isometry& g, const Isometry& h);

/// Throws AssemblyError (bad index, duplicate kite, overlap).
Assembly assemble(const AssemblySpec& spec);

/// Outline of the union: shared edges cancel, the rest must form one closed
/// cycle. Returned counter-clockwise, starting at the smallest vertex, with
/// straight-angle vertices kept. Throws AssemblyError on disconnected or open
/// boundaries.
Polygon boundary(const Assembly& assembly);

/// Sorted placement keys (images of A and C), for comparing placement sets.
std::vector<std::pair<Point, Point>> placement_set(const Assembly& assembly);

}  // namespace monotile
