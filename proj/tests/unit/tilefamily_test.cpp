#include "monotile/tilefamily.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "monotile/errors.hpp"
#include "monotile/signature.hpp"

using namespace monotile;

namespace {

QS3 r3() { return QS3::sqrt3(); }
QS3 hat_a() { return (r3() - QS3(1)) / QS3(2); }

std::size_t count_equal(const std::vector<QS3>& xs, const QS3& v) {
  return static_cast<std::size_t>(std::count(xs.begin(), xs.end(), v));
}

// Exact areas and vertices below were computed independently with sympy and
// cross-checked with shapely.
struct AreaCase {
  const char* a;
  QS3 area;
};

}  // namespace

TEST(TileParam, Range) {
  EXPECT_THROW(TileParam(QS3(-1)), DomainError);
  EXPECT_THROW(TileParam(QS3(1) + QS3::fraction(1, 1000)), DomainError);
  EXPECT_NO_THROW(TileParam(QS3(0)));
  EXPECT_EQ(TileParam(hat_a()).b(), (QS3(3) - r3()) / QS3(2));
}

TEST(SignTableText, RoundTrip) {
  const SignTable& t = canonical_sign_table();
  EXPECT_EQ(t.signs, (std::array<int, 6>{-1, 1, -1, -1, 1, 1}));
  EXPECT_EQ(parse_sign_table(format_sign_table(t)), t);
  EXPECT_THROW(parse_sign_table("D +\n"), ParseError);
  EXPECT_THROW(parse_sign_table("D +\nF +\nG +\nH +\nJ +\nQ +\n"), ParseError);
  EXPECT_THROW(parse_sign_table("D *\nF +\nG +\nH +\nJ +\nL +\n"), ParseError);
}

TEST(SignTableDerivation, UniqueSurvivor) {
  const auto tables = derive_sign_table();
  ASSERT_EQ(tables.size(), 1u);
  EXPECT_EQ(tables[0], canonical_sign_table());
}

TEST(SignTableDerivation, FlippingASignBreaksTheTile) {
  for (std::size_t i = 0; i < 6; ++i) {
    SignTable t = canonical_sign_table();
    t.signs[i] = -t.signs[i];
    const TileParam a(QS3::fraction(37, 100));
    const bool closes = closure_gap(a, t).is_zero() && closure_gap(TileParam(QS3::fraction(1, 3)), t).is_zero();
    const bool simple = closes && is_simple(build_raw_tile(a, t));
    EXPECT_FALSE(closes && simple) << SignTable::kLabels[i];
  }
}

TEST(Tile, HatRawVertices) {
  const Polygon raw = build_raw_tile(TileParam(hat_a()));
  const std::vector<std::string> expected{
      "0;0", "-1/2 + 1/2*sqrt3;0", "-1 + sqrt3;0", "-5/4 + 5/4*sqrt3;3/4 - 1/4*sqrt3",
      "-2 + 2*sqrt3;0", "-11/4 + 11/4*sqrt3;3/4 - 1/4*sqrt3", "-5/2 + 5/2*sqrt3;3/2 - 1/2*sqrt3",
      "-2 + 2*sqrt3;3/2 - 1/2*sqrt3", "-2 + 2*sqrt3;3 - sqrt3", "-5/4 + 5/4*sqrt3;15/4 - 5/4*sqrt3",
      "-1 + sqrt3;3 - sqrt3", "-1/2 + 1/2*sqrt3;3 - sqrt3", "-1/2 + 1/2*sqrt3;3/2 - 1/2*sqrt3",
      "1/4 - 1/4*sqrt3;3/4 - 1/4*sqrt3"};
  ASSERT_EQ(raw.size(), expected.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    EXPECT_EQ(to_string(raw[i].x) + ";" + to_string(raw[i].y), expected[i]) << TilePolygon::kLabels[i];
  }
}

TEST(Tile, ClosureAndEdges) {
  for (const char* text : {"1/3", "1/2", "37/100", "(sqrt3-1)/2", "(3-sqrt3)/2"}) {
    const TileParam a(parse_qs3(text));
    const Polygon raw = build_raw_tile(a);
    EXPECT_TRUE(closure_gap(a).is_zero()) << text;
    EXPECT_EQ(squared_distance(raw[13], raw[0]), a.a() * a.a()) << text;
    const auto lengths = squared_edge_lengths(raw);
    if (a.a() != a.b()) {
      EXPECT_EQ(count_equal(lengths, a.a() * a.a()), 8u) << text;
      EXPECT_EQ(count_equal(lengths, a.b() * a.b()), 6u) << text;
    } else {
      EXPECT_EQ(count_equal(lengths, a.a() * a.a()), 14u);
    }
    const Polygon ccw = shoelace_area(raw).sign() < 0 ? reversed(raw) : raw;
    const auto angles = interior_angle_classes(ccw);
    ASSERT_TRUE(angles) << text;
    int sum = 0;
    for (int k : *angles) sum += k;
    EXPECT_EQ(sum * 30, 2160) << text;
    EXPECT_TRUE(is_simple(raw)) << text;
  }
}

TEST(Tile, ClosurePolynomialVanishes) {
  for (const QS3& c : closure_gap_polynomial()) EXPECT_TRUE(c.is_zero()) << c;
}

TEST(Tile, Areas) {
  const std::vector<AreaCase> cases{
      {"1/3", QS3::fraction(2, 3) + QS3::fraction(2, 3) * r3()},
      {"1/2", QS3::fraction(3, 4) + QS3::fraction(3, 4) * r3()},
      {"37/100", QS3::fraction(6993, 10000) + QS3::fraction(6707, 10000) * r3()},
      {"(sqrt3-1)/2", QS3(-12) + QS3(8) * r3()},
      {"(3-sqrt3)/2", QS3(-15) + QS3(10) * r3()},
      {"0", r3()},
      {"1", QS3(2) * r3()},
  };
  for (const auto& c : cases) {
    EXPECT_EQ(shoelace_area(build_tile(TileParam(parse_qs3(c.a))).normalized), c.area) << c.a;
  }
}

TEST(Tile, SimpleOnGrid) {
  for (long k = 1; k <= 97; ++k) {
    const TilePolygon t = build_tile(TileParam(QS3::fraction(k, 98)));
    EXPECT_TRUE(is_simple(t.raw)) << k;
    EXPECT_TRUE(is_simple(t.normalized)) << k;
  }
}

TEST(Tile, DegenerateMembers) {
  const TilePolygon t01 = build_tile(TileParam(QS3(0)));
  EXPECT_EQ(t01.normalized.size(), 6u);
  for (const QS3& l : squared_edge_lengths(t01.normalized)) EXPECT_EQ(l, QS3(1));
  const TilePolygon t10 = build_tile(TileParam(QS3(1)));
  const auto lengths = squared_edge_lengths(t10.normalized);
  EXPECT_EQ(t10.normalized.size(), 7u);
  EXPECT_EQ(count_equal(lengths, QS3(1)), 6u);
  EXPECT_EQ(count_equal(lengths, QS3(4)), 1u);
}

TEST(Tile, NamedTiles) {
  EXPECT_EQ(named_parameter(NamedTile::kHat), hat_a());
  EXPECT_EQ(named_parameter(NamedTile::kHat), parse_qs3("1/(1+sqrt3)"));
  EXPECT_EQ(named_parameter(NamedTile::kTurtle), parse_qs3("sqrt3/(1+sqrt3)"));
  EXPECT_EQ(named_parameter(NamedTile::kT11), QS3::fraction(1, 2));
  EXPECT_EQ(parse_tile_name("t10"), NamedTile::kT10);
  EXPECT_EQ(tile_name(NamedTile::kTurtle), "turtle");
  EXPECT_THROW(parse_tile_name("spectre"), DomainError);
  EXPECT_EQ(kite_count(NamedTile::kHat), 8);
  EXPECT_EQ(kite_count(NamedTile::kTurtle), 10);
  EXPECT_EQ(kite_count(NamedTile::kT01), 12);
  EXPECT_EQ(kite_count(NamedTile::kT10), 24);
  EXPECT_FALSE(kite_count(NamedTile::kT11).has_value());
}

TEST(Tile, HatAndTurtleAreNotSimilar) {
  EXPECT_FALSE(similar(named_tile(NamedTile::kHat).normalized, named_tile(NamedTile::kTurtle).normalized));
}

// Tile(a, b) scaled by k is Tile(ka, kb).
TEST(Prop2, RandomParameters) {
  std::mt19937 rng(2023);
  std::uniform_int_distribution<long> num(1, 998);
  for (int i = 0; i < 20; ++i) {
    const TilePolygon t = build_tile(TileParam(QS3::fraction(num(rng), 999)));
    for (const QS3& k : {QS3::fraction(1, 2), QS3(2), QS3(1) + r3()}) EXPECT_TRUE(verify_prop2(t, k));
  }
  EXPECT_THROW(verify_prop2(named_tile(NamedTile::kHat), QS3(0)), DomainError);
}
