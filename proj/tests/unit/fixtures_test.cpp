// The shipped data files must be exactly what the generators produce.
#include "monotile/fixtures.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "monotile/errors.hpp"

using namespace monotile;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string spec_path(NamedTile t) { return data_path(std::string(tile_name(t)) + ".spec"); }

}  // namespace

TEST(Fixtures, SignTable) {
  EXPECT_EQ(parse_sign_table(slurp(data_path("sign_table.txt"))), canonical_sign_table());
  EXPECT_EQ(slurp(data_path("sign_table.txt")), format_sign_table(derive_sign_table().front()));
}

TEST(Fixtures, HatSpecRegenerates) { EXPECT_EQ(slurp(spec_path(NamedTile::kHat)), generate_assembly_fixture(NamedTile::kHat)); }

TEST(Fixtures, TurtleSpecRegenerates) {
  EXPECT_EQ(slurp(spec_path(NamedTile::kTurtle)), generate_assembly_fixture(NamedTile::kTurtle));
}

TEST(Fixtures, T01SpecRegenerates) { EXPECT_EQ(slurp(spec_path(NamedTile::kT01)), generate_assembly_fixture(NamedTile::kT01)); }

TEST(Fixtures, T10SpecRegenerates) { EXPECT_EQ(slurp(spec_path(NamedTile::kT10)), generate_assembly_fixture(NamedTile::kT10)); }

TEST(Fixtures, ChevronPatchRegenerates) {
  EXPECT_EQ(slurp(periodic_fixture_path(NamedTile::kT10)), generate_periodic_fixture(NamedTile::kT10));
}

TEST(Fixtures, T01PatchRegenerates) {
  EXPECT_EQ(slurp(periodic_fixture_path(NamedTile::kT01)), generate_periodic_fixture(NamedTile::kT01));
}

TEST(Fixtures, SpecLineCounts) {
  // Steps = kites - 1.
  EXPECT_EQ(read_assembly_fixture(NamedTile::kHat).spec.steps.size(), 7u);
  EXPECT_EQ(read_assembly_fixture(NamedTile::kTurtle).spec.steps.size(), 9u);
  EXPECT_EQ(read_assembly_fixture(NamedTile::kT01).spec.steps.size(), 11u);
  EXPECT_EQ(read_assembly_fixture(NamedTile::kT10).spec.steps.size(), 23u);
}

TEST(Fixtures, RecordedScales) {
  const QS3 hat_scale = QS3(1) + QS3::sqrt3();
  const QS3 degenerate_scale = QS3(2) * QS3::sqrt3();
  EXPECT_EQ(*read_assembly_fixture(NamedTile::kHat).scale, hat_scale);
  EXPECT_EQ(*read_assembly_fixture(NamedTile::kTurtle).scale, hat_scale);
  EXPECT_EQ(*read_assembly_fixture(NamedTile::kT01).scale, degenerate_scale);
  EXPECT_EQ(*read_assembly_fixture(NamedTile::kT10).scale, degenerate_scale);
}

TEST(Fixtures, GeneratorsRejectUndefinedTiles) {
  EXPECT_THROW(generate_assembly_fixture(NamedTile::kT11), DomainError);
  EXPECT_THROW(generate_periodic_fixture(NamedTile::kHat), DomainError);
}

TEST(Fixtures, MissingFile) { EXPECT_THROW(read_assembly_fixture(NamedTile::kHat, "/nonexistent"), Error); }
