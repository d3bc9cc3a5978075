#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "monotile/fixtures.hpp"

using namespace monotile;

// About a minute: the Tile(1,1) unit needs a mirrored copy, found late in the search.
TEST(FixturesSlow, T11PatchRegenerates) {
  std::ifstream in(periodic_fixture_path(NamedTile::kT11), std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  EXPECT_EQ(buf.str(), generate_periodic_fixture(NamedTile::kT11));
}
