#include "monotile/kite.hpp"

#include <gtest/gtest.h>

#include <algorithm>

#include "monotile/errors.hpp"
#include "monotile/kite_lattice.hpp"

using namespace monotile;

namespace {

Point P(long x, long y) { return {QS3(x), QS3(y)}; }
QS3 r3() { return QS3::sqrt3(); }

AssemblyError::Kind error_kind(const AssemblySpec& spec) {
  try {
    assemble(spec);
  } catch (const AssemblyError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error";
  return AssemblyError::Kind::kOpenChain;
}

}  // namespace

TEST(Kite, Construction) {
  const Kite k = laves_kite();
  EXPECT_EQ(k.a, P(0, 0));
  EXPECT_EQ(k.b, P(1, 0));
  EXPECT_EQ(k.c, (Point{QS3(1), r3()}));
  EXPECT_EQ(k.b_prime, (Point{QS3::fraction(-1, 2), r3() / QS3(2)}));
  EXPECT_EQ(squared_distance(k.a, k.b), QS3(1));
  EXPECT_EQ(squared_distance(k.a, k.b_prime), QS3(1));
  EXPECT_EQ(squared_distance(k.b, k.c), QS3(3));
  EXPECT_EQ(squared_distance(k.b_prime, k.c), QS3(3));
  EXPECT_EQ(*interior_angle_classes(k.polygon()), (std::vector<int>{4, 3, 2, 3}));
  EXPECT_EQ(shoelace_area(k.polygon()), r3());
}

TEST(Kite, SpecParsing) {
  const AssemblySpec s = parse_assembly_spec("# comment\n0 1\n\n1 2  # trailing\n");
  ASSERT_EQ(s.steps.size(), 2u);
  EXPECT_EQ(s.steps[1], (AssemblyStep{1, 2}));
  EXPECT_EQ(parse_assembly_spec(format_assembly_spec(s, "header")), s);
  EXPECT_THROW(parse_assembly_spec("0\n"), ParseError);
  EXPECT_THROW(parse_assembly_spec("0 1 2\n"), ParseError);
  EXPECT_THROW(parse_assembly_spec("a b\n"), ParseError);
}

TEST(Kite, EmptySpecIsTheSeed) {
  const Assembly a = assemble(AssemblySpec{});
  ASSERT_EQ(a.size(), 1u);
  EXPECT_EQ(a.kite(0), laves_kite().polygon());
  EXPECT_EQ(boundary(a).size(), 4u);
}

TEST(Kite, ReflectAcrossBC) {
  const Assembly a = assemble(parse_assembly_spec("0 1\n"));
  ASSERT_EQ(a.size(), 2u);
  const Polygon second = a.kite(1);
  EXPECT_TRUE(std::find(second.begin(), second.end(), P(2, 0)) != second.end());
  EXPECT_TRUE(a.placements[1].is_reflection());
  // Six boundary vertices; B is a straight-angle vertex between A and (2,0).
  const Polygon outline = boundary(a);
  EXPECT_EQ(outline.size(), 6u);
  EXPECT_EQ(normalize_polygon(outline).size(), 5u);
  EXPECT_EQ(shoelace_area(outline), QS3(2) * r3());
}

TEST(Kite, Errors) {
  EXPECT_EQ(error_kind(parse_assembly_spec("0 1\n1 1\n")), AssemblyError::Kind::kDuplicateKite);
  EXPECT_EQ(error_kind(parse_assembly_spec("1 0\n")), AssemblyError::Kind::kBadIndex);
  EXPECT_EQ(error_kind(parse_assembly_spec("0 4\n")), AssemblyError::Kind::kBadIndex);
  EXPECT_EQ(error_kind(parse_assembly_spec("-1 0\n")), AssemblyError::Kind::kBadIndex);
}

TEST(Kite, DisconnectedBoundary) {
  Assembly a;
  a.placements = {Isometry::identity(), Isometry::translation(P(10, 0))};
  try {
    boundary(a);
    FAIL();
  } catch (const AssemblyError& e) {
    EXPECT_EQ(e.kind(), AssemblyError::Kind::kDisconnectedBoundary);
  }
}

TEST(Kite, SameKiteUsesMirrorAxis) {
  // Reflecting the seed across its own axis AC gives the same kite.
  const Kite k = laves_kite();
  const Isometry flip = Isometry::reflection(Line::through(k.a, k.c));
  EXPECT_TRUE(same_kite(Isometry::identity(), flip));
  EXPECT_FALSE(same_kite(Isometry::identity(), Isometry::translation(P(1, 0))));
}

TEST(Kite, ThreeKitesAroundTheObtuseCorner) {
  // Three kites share vertex A (120 degrees each); the B corners become
  // straight angles, leaving an equilateral triangle.
  const Assembly a = assemble(parse_assembly_spec("0 0\n1 3\n"));
  const Polygon outline = normalize_polygon(boundary(a));
  EXPECT_EQ(shoelace_area(outline), QS3(3) * r3());
  ASSERT_EQ(outline.size(), 3u);
  const auto len2 = squared_edge_lengths(outline);
  EXPECT_EQ(len2, std::vector<QS3>(3, QS3(12)));
}

TEST(KiteLattice, NeighborAcrossSharedEdgeReturns) {
  KiteLattice lattice;
  for (int e = 0; e < 4; ++e) {
    const int n = lattice.neighbor(KiteLattice::kSeed, e);
    EXPECT_NE(n, KiteLattice::kSeed);
    const auto& shared = lattice.edges(KiteLattice::kSeed)[static_cast<std::size_t>(e)];
    int back = -1;
    for (int f = 0; f < 4; ++f) {
      const auto& edge = lattice.edges(n)[static_cast<std::size_t>(f)];
      if (std::minmax(edge.from, edge.to) == std::minmax(shared.from, shared.to)) back = f;
    }
    ASSERT_GE(back, 0);
    EXPECT_EQ(lattice.neighbor(n, back), KiteLattice::kSeed);
  }
}

TEST(KiteLattice, SpanningSpecReplays) {
  KiteLattice lattice;
  const int a = lattice.neighbor(KiteLattice::kSeed, 1);
  const int b = lattice.neighbor(a, 2);
  const auto spec = lattice.spanning_spec({KiteLattice::kSeed, a, b});
  ASSERT_TRUE(spec);
  const Assembly assembly = assemble(*spec);
  ASSERT_EQ(assembly.size(), 3u);
  for (int id : {KiteLattice::kSeed, a, b}) {
    EXPECT_TRUE(std::any_of(assembly.placements.begin(), assembly.placements.end(),
                            [&](const Isometry& g) { return same_kite(g, lattice.placement(id)); }));
  }
  EXPECT_FALSE(lattice.spanning_spec({a, b}).has_value());
}

TEST(KiteLattice, GrowToRadius) {
  KiteLattice lattice;
  const auto ids = lattice.grow_to_radius(QS3(9));
  for (int id : ids) EXPECT_LE(squared_length(lattice.centroid(id)), QS3(9));
  EXPECT_EQ(ids.size(), 18u);
}
