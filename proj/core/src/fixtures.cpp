#include "monotile/fixtures.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "monotile/errors.hpp"
#include "monotile/search.hpp"
#include "monotile/signature.hpp"
#include "monotile/tiling.hpp"

namespace monotile {

std::string data_dir() {
  if (const char* env = std::getenv("MONOTILE_DATA_DIR"); env && *env) return env;
  if (std::filesystem::is_directory(MONOTILE_DEFAULT_DATA_DIR)) return MONOTILE_DEFAULT_DATA_DIR;
  return MONOTILE_INSTALL_DATA_DIR;
}

std::string data_path(const std::string& file) { return (std::filesystem::path(data_dir()) / file).string(); }

AssemblyFixture parse_assembly_fixture(const std::string& text) {
  AssemblyFixture fixture;
  fixture.spec = parse_assembly_spec(text);
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto pos = line.find("# scale:");
    if (pos != std::string::npos) fixture.scale = parse_qs3(line.substr(pos + 8));
  }
  return fixture;
}

AssemblyFixture read_assembly_fixture(NamedTile tile, const std::string& dir) {
  const std::string base = dir.empty() ? data_dir() : dir;
  const std::string path = (std::filesystem::path(base) / (std::string(tile_name(tile)) + ".spec")).string();
  std::ifstream in(path);
  if (!in) throw Error("cannot open assembly fixture '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_assembly_fixture(buf.str());
}

std::string periodic_fixture_path(NamedTile tile, const std::string& dir) {
  const std::string base = dir.empty() ? data_dir() : dir;
  return (std::filesystem::path(base) / (std::string(tile_name(tile)) + ".periodic")).string();
}

std::string generate_assembly_fixture(NamedTile tile) {
  const auto n = kite_count(tile);
  if (!n) throw DomainError("no kite assembly is defined for " + std::string(tile_name(tile)));
  const Polygon target = named_tile(tile).normalized;
  const bool small = tile == NamedTile::kHat || tile == NamedTile::kTurtle;
  const std::vector<AssemblySpec> specs =
      small ? search_assembly(canonical_signature(target, SignatureMode::kSimilarity), *n, 1000000)
            : cover_assembly(target, *n);
  if (specs.empty()) throw Error("no assembly found for " + std::string(tile_name(tile)));
  const SimilarityResult sim = similarity_between(target, normalize_polygon(boundary(assemble(specs.front()))));
  if (!sim) throw Error("assembly outline is not similar to the tile");

  std::ostringstream header;
  header << tile_name(tile) << ": " << *n << " Laves kites, first of " << specs.size() << " placement sets found by "
         << (small ? "breadth-first search" : "cover search") << "\n";
  header << "scale: " << to_string(sim.witness->scale);
  return format_assembly_spec(specs.front(), header.str());
}

std::string generate_periodic_fixture(NamedTile tile) {
  if (tile == NamedTile::kHat || tile == NamedTile::kTurtle) {
    throw DomainError("periodic fixtures exist only for t01, t11 and t10");
  }
  const auto patch = find_periodic_patch(named_tile(tile).normalized, std::string(tile_name(tile)), 2);
  if (!patch) throw Error("no periodic patch found for " + std::string(tile_name(tile)));
  std::ostringstream header;
  header << tile_name(tile) << ": 3x3 block of a " << patch->tiles_per_unit << "-tile unit, "
         << (patch->uses_reflection ? "uses" : "no") << " reflected copies\n";
  header << "search transcript:";
  for (const auto& line : patch->transcript) header << "\n  " << line;
  return format_placements(*patch, header.str());
}

}  // namespace monotile
