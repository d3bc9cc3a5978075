#include "monotile/laves.hpp"

#include <gtest/gtest.h>

#include <algorithm>

#include "monotile/errors.hpp"
#include "monotile/kite.hpp"
#include "monotile/signature.hpp"

using namespace monotile;

namespace {

std::size_t count_size(const Patch& p, std::size_t n) {
  return static_cast<std::size_t>(
      std::count_if(p.faces.begin(), p.faces.end(), [n](const Polygon& f) { return f.size() == n; }));
}

}  // namespace

// Face counts from an independent floating-point enumeration.
TEST(Laves, TriangularPatchCounts) {
  EXPECT_EQ(triangular_patch(1).faces.size(), 6u);
  EXPECT_EQ(triangular_patch(2).faces.size(), 24u);
  const Patch p = triangular_patch(3);
  EXPECT_EQ(p.faces.size(), 60u);
  EXPECT_EQ(p.interior_vertices().size(), 19u);
  EXPECT_THROW(triangular_patch(0), DomainError);
  EXPECT_THROW(triangular_patch(7), DomainError);
}

TEST(Laves, Patch3464Counts) {
  const Patch p = patch_3464(2);
  EXPECT_EQ(count_size(p, 6), 7u);
  EXPECT_EQ(count_size(p, 4), 30u);
  EXPECT_EQ(count_size(p, 3), 24u);
  EXPECT_EQ(p.interior_vertices().size(), 42u);
  const Patch big = patch_3464(3);
  EXPECT_EQ(count_size(big, 6), 19u);
  EXPECT_EQ(count_size(big, 4), 72u);
  EXPECT_EQ(count_size(big, 3), 54u);
  EXPECT_THROW(patch_3464(5), DomainError);
}

TEST(Laves, VertexConfiguration3464) {
  const Patch p = patch_3464(2);
  for (int v : p.interior_vertices()) {
    auto sizes = p.fan_sizes(v);
    ASSERT_EQ(sizes.size(), 4u);
    // Cyclic order 3.4.6.4 up to rotation and direction.
    bool found = false;
    for (int r = 0; r < 4 && !found; ++r) {
      std::rotate(sizes.begin(), sizes.begin() + 1, sizes.end());
      found = sizes == std::vector<int>{3, 4, 6, 4} || sizes == std::vector<int>{4, 6, 4, 3};
    }
    EXPECT_TRUE(found);
  }
}

TEST(Laves, AdjacencySharesFullEdges) {
  const Patch p = triangular_patch(1);
  // Six triangles around the origin form a ring of six shared edges.
  EXPECT_EQ(p.adjacency.size(), 6u);
}

TEST(Laves, SquareCenter) {
  const Point a{QS3(0), QS3(0)};
  const Point b{QS3(1), QS3(0)};
  EXPECT_EQ(square_center_on_edge(a, b, Point{QS3::fraction(1, 2), QS3(1)}),
            (Point{QS3::fraction(1, 2), QS3::fraction(-1, 2)}));
}

TEST(Laves, DualOfTrianglesIsHexagonal) {
  const DualPatch d = dual(triangular_patch(3));
  EXPECT_EQ(d.faces.size(), 19u);
  for (const Polygon& f : d.faces) {
    ASSERT_EQ(f.size(), 6u);
    for (const QS3& l : squared_edge_lengths(f)) EXPECT_EQ(l, QS3::fraction(1, 3));
    const auto angles = interior_angle_classes(f);
    ASSERT_TRUE(angles);
    for (int k : *angles) EXPECT_EQ(k, 4);
  }
}

TEST(Laves, DualOf3464IsTheKite) {
  const DualPatch d = dual(patch_3464(2));
  EXPECT_EQ(d.faces.size(), 42u);
  const QS3 expected = (QS3(3) + QS3::sqrt3()) / QS3(6);
  for (const Polygon& f : d.faces) {
    const SimilarityResult r = similarity_between(laves_kite().polygon(), f);
    ASSERT_TRUE(r);
    EXPECT_EQ(r.witness->scale, expected);
  }
}

TEST(Laves, DualNeedsInteriorVertex) {
  Patch lone = make_patch({Polygon({{QS3(0), QS3(0)}, {QS3(1), QS3(0)}, {QS3::fraction(1, 2), QS3::fraction(1, 2) * QS3::sqrt3()}})});
  EXPECT_THROW(dual(lone), DomainError);
}
