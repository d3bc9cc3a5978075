#include "monotile/verify.hpp"

#include <algorithm>
#include <filesystem>
#include <functional>

#include "monotile/errors.hpp"
#include "monotile/fixtures.hpp"
#include "monotile/kite.hpp"
#include "monotile/laves.hpp"
#include "monotile/signature.hpp"
#include "monotile/tilefamily.hpp"
#include "monotile/tiling.hpp"

namespace monotile {

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

Suite parse_suite(std::string_view name) {
  if (name == "closure") return Suite::kClosure;
  if (name == "assemblies") return Suite::kAssemblies;
  if (name == "duals") return Suite::kDuals;
  if (name == "patches") return Suite::kPatches;
  if (name == "all") return Suite::kAll;
  throw DomainError("unknown suite '" + std::string(name) + "'");
}

namespace {

void run(SuiteReport& report, const std::string& name, const std::function<std::string()>& body) {
  try {
    const std::string failure = body();
    report.checks.push_back({name, failure.empty(), failure});
  } catch (const std::exception& e) {
    report.checks.push_back({name, false, e.what()});
  }
}

void closure_suite(SuiteReport& report) {
  const std::vector<std::string> params{"1/3", "1/2", "37/100", "(sqrt3-1)/2", "(3-sqrt3)/2"};
  for (const auto& text : params) {
    run(report, "closure a=" + text, [&]() -> std::string {
      const TileParam a(parse_qs3(text));
      if (!closure_gap(a).is_zero()) return "closing edge differs from a";
      const Polygon raw = build_raw_tile(a);
      if (!is_simple(raw)) return "raw polygon not simple";
      return "";
    });
  }
  run(report, "closure polynomial vanishes", []() -> std::string {
    for (const QS3& c : closure_gap_polynomial()) {
      if (!c.is_zero()) return "nonzero coefficient " + to_string(c);
    }
    return "";
  });
  run(report, "shipped sign table is the derived one", []() -> std::string {
    const auto tables = derive_sign_table();
    return tables.front() == canonical_sign_table() ? "" : "derived table differs";
  });
}

void assemblies_suite(SuiteReport& report) {
  for (NamedTile tile : {NamedTile::kHat, NamedTile::kTurtle, NamedTile::kT01, NamedTile::kT10}) {
    run(report, "assembly " + std::string(tile_name(tile)), [tile]() -> std::string {
      const AssemblyFixture fixture = read_assembly_fixture(tile);
      const Assembly assembly = assemble(fixture.spec);
      const int n = *kite_count(tile);
      if (assembly.size() != static_cast<std::size_t>(n)) return "wrong kite count " + std::to_string(assembly.size());
      const Polygon outline = normalize_polygon(boundary(assembly));
      if (shoelace_area(outline) != QS3(n) * QS3::sqrt3()) return "area " + to_string(shoelace_area(outline));
      const SimilarityResult sim = similarity_between(named_tile(tile).normalized, outline);
      if (!sim) return "outline not similar to the parametric tile";
      if (fixture.scale && sim.witness->scale != *fixture.scale) return "scale " + to_string(sim.witness->scale);
      return "";
    });
  }
}

void duals_suite(SuiteReport& report) {
  run(report, "dual of triangular patch is hexagonal", []() -> std::string {
    const DualPatch d = dual(triangular_patch(3));
    for (const Polygon& f : d.faces) {
      if (f.size() != 6) return "face with " + std::to_string(f.size()) + " edges";
      const auto lengths = squared_edge_lengths(f);
      if (std::adjacent_find(lengths.begin(), lengths.end(), std::not_equal_to<>()) != lengths.end()) {
        return "unequal edges";
      }
      const auto angles = interior_angle_classes(f);
      for (int k : *angles) {
        if (k != 4) return "angle class " + std::to_string(k);
      }
    }
    return "";
  });
  run(report, "dual of (3.4.6.4) patch is the Laves kite", []() -> std::string {
    const DualPatch d = dual(patch_3464(2));
    const QS3 expected = (QS3(3) + QS3::sqrt3()) / QS3(6);
    const Polygon kite = laves_kite().polygon();
    for (const Polygon& f : d.faces) {
      const SimilarityResult sim = similarity_between(kite, f);
      if (!sim) return "face not similar to the kite";
      if (sim.witness->scale != expected) return "scale " + to_string(sim.witness->scale);
    }
    return "";
  });
}

void patches_suite(SuiteReport& report) {
  for (NamedTile tile : {NamedTile::kT01, NamedTile::kT11, NamedTile::kT10}) {
    const std::string path = periodic_fixture_path(tile);
    if (tile != NamedTile::kT10 && !std::filesystem::exists(path)) continue;
    run(report, "periodic patch " + std::string(tile_name(tile)), [&path]() -> std::string {
      const PlacementFixture fixture = read_placements(path);
      const PatchReport r = verify_patch(fixture.placements);
      if (!r.passed()) return "patch check failed";
      if (!fixture.v1 || !fixture.v2) return "lattice vectors missing";
      if (!translational_closure(fixture.placements, *fixture.v1, *fixture.v2)) return "not closed under the lattice";
      return "";
    });
  }
}

}  // namespace

SuiteReport run_suite(Suite suite) {
  SuiteReport report;
  if (suite == Suite::kClosure || suite == Suite::kAll) closure_suite(report);
  if (suite == Suite::kAssemblies || suite == Suite::kAll) assemblies_suite(report);
  if (suite == Suite::kDuals || suite == Suite::kAll) duals_suite(report);
  if (suite == Suite::kPatches || suite == Suite::kAll) patches_suite(report);
  return report;
}

}  // namespace monotile
