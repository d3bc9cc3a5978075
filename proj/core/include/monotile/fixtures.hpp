#pragma once

#include <optional>
#include <string>

#include "monotile/kite.hpp"
#include "monotile/tilefamily.hpp"

namespace monotile {

/// Directory holding the shipped fixtures: $MONOTILE_DATA_DIR if set, else
/// the source tree's data directory, else the installed copy.
std::string data_dir();
std::string data_path(const std::string& file);

/// Assembly spec of a named tile plus the similarity scale recorded in its
/// `# scale: <qs3>` comment, if any.
struct AssemblyFixture {
  AssemblySpec spec;
  std::optional<QS3> scale;
};

/// Reads `<dir>/<name>.spec`; `dir` defaults to data_dir().
AssemblyFixture read_assembly_fixture(NamedTile tile, const std::string& dir = "");
AssemblyFixture parse_assembly_fixture(const std::string& text);

/// `<name>.periodic` in the data directory.
std::string periodic_fixture_path(NamedTile tile, const std::string& dir = "");

/// Text of `<name>.spec` as shipped: hat and turtle come from
/// search_assembly, t01 and t10 from cover_assembly (first result in both
/// cases), with the similarity scale to the parametric tile in a comment.
/// Throws DomainError for t11 and Error when nothing is found.
std::string generate_assembly_fixture(NamedTile tile);

/// Text of `<name>.periodic` as shipped, from find_periodic_patch with the
/// search transcript as comments. Throws DomainError for hat and turtle and
/// Error when the search finds nothing.
std::string generate_periodic_fixture(NamedTile tile);

}  // namespace monotile
