#include "monotile/search.hpp"

#include <gtest/gtest.h>

#include <algorithm>

#include "monotile/errors.hpp"
#include "monotile/fixtures.hpp"
#include "monotile/tilefamily.hpp"

using namespace monotile;

namespace {

Signature similarity(const Polygon& p) { return canonical_signature(p, SignatureMode::kSimilarity); }

}  // namespace

TEST(Search, SingleKite) {
  const auto specs = search_assembly(similarity(laves_kite().polygon()), 1, 100);
  ASSERT_EQ(specs.size(), 1u);
  EXPECT_TRUE(specs[0].steps.empty());
}

TEST(Search, TwoKiteUnion) {
  const Polygon target = normalize_polygon(boundary(assemble(parse_assembly_spec("0 1\n"))));
  const auto specs = search_assembly(canonical_signature(target, SignatureMode::kCongruence), 2, 1000);
  EXPECT_TRUE(std::find(specs.begin(), specs.end(), parse_assembly_spec("0 1\n")) != specs.end());
}

TEST(Search, HatWithEightKites) {
  const SearchReport r = search_assembly_report(similarity(named_tile(NamedTile::kHat).normalized), 8, 1000000);
  ASSERT_FALSE(r.specs.empty());
  for (const auto& spec : r.specs) {
    const Assembly a = assemble(spec);
    EXPECT_EQ(a.size(), 8u);
    EXPECT_EQ(shoelace_area(boundary(a)), QS3(8) * QS3::sqrt3());
  }
}

TEST(Search, NoHatWithSevenKites) {
  EXPECT_TRUE(search_assembly(similarity(named_tile(NamedTile::kHat).normalized), 7, 1000000).empty());
}

TEST(Search, LimitIsEnforced) {
  EXPECT_THROW(search_assembly(similarity(named_tile(NamedTile::kHat).normalized), 8, 50), LimitExceeded);
}

TEST(Search, DeterministicOrder) {
  const Signature s = similarity(named_tile(NamedTile::kHat).normalized);
  EXPECT_EQ(search_assembly(s, 8, 1000000), search_assembly(s, 8, 1000000));
}

// The target-guided search must agree with breadth-first search where both run.
TEST(Search, CoverAgreesWithBreadthFirstOnHat) {
  const Polygon hat = named_tile(NamedTile::kHat).normalized;
  auto sets = [](const std::vector<AssemblySpec>& specs) {
    std::vector<std::vector<std::pair<Point, Point>>> out;
    for (const auto& s : specs) out.push_back(placement_set(assemble(s)));
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
      return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), [](const auto& x, const auto& y) {
        return PointLess{}(x.first, y.first) || (x.first == y.first && PointLess{}(x.second, y.second));
      });
    });
    return out;
  };
  EXPECT_EQ(sets(cover_assembly(hat, 8)), sets(search_assembly(similarity(hat), 8, 1000000)));
}

TEST(Search, CoverFindsDegenerateTiles) {
  for (NamedTile t : {NamedTile::kT01, NamedTile::kT10}) {
    const Polygon target = named_tile(t).normalized;
    const auto specs = cover_assembly(target, *kite_count(t));
    ASSERT_FALSE(specs.empty()) << tile_name(t);
    const Polygon outline = normalize_polygon(boundary(assemble(specs.front())));
    EXPECT_TRUE(similar(target, outline));
  }
}

TEST(Search, CoverRejectsImpossibleCounts) {
  // Area 9*sqrt3 would need scale sqrt(9/8) for the hat: not in Q[sqrt3].
  EXPECT_TRUE(cover_assembly(named_tile(NamedTile::kHat).normalized, 9).empty());
}
