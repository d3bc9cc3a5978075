#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <iostream>
#include <optional>
#include <sstream>

#include "monotile/errors.hpp"
#include "monotile/kite.hpp"
#include "monotile/laves.hpp"
#include "monotile/render.hpp"
#include "monotile/search.hpp"
#include "monotile/signature.hpp"
#include "monotile/tilefamily.hpp"
#include "monotile/verify.hpp"

namespace monotile::cli {

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

// Input errors the user can fix by changing flags.
struct UsageError : Error {
  using Error::Error;
};

std::string approx(const QS3& x, int digits = 6) { return to_string(x) + " (≈ " + to_decimal(x, digits) + ")"; }

std::string signature_text(const Signature& s) {
  std::ostringstream out;
  for (std::size_t i = 0; i < s.items.size(); ++i) {
    out << (i ? " " : "") << "(" << to_string(s.items[i].first) << "," << s.items[i].second * 30 << ")";
  }
  return out.str();
}

AssemblySpec load_spec(const std::string& path) {
  if (path == "-") return parse_assembly_spec(std::cin);
  return read_assembly_spec(path);
}

int tile_command(const std::string& a_text, const std::string& name, const std::string& svg, bool report,
                 std::ostream& out) {
  if (a_text.empty() == name.empty()) throw UsageError("tile needs exactly one of --a or --name");
  std::optional<NamedTile> named;
  QS3 a;
  if (!name.empty()) {
    try {
      named = parse_tile_name(name);
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
    a = named_parameter(*named);
  } else {
    a = parse_qs3(a_text);
  }
  const TilePolygon tile = build_tile(TileParam(a));

  if (report) {
    if (named) out << "name: " << tile_name(*named) << "\n";
    out << "a: " << approx(a, 2) << "\n";
    out << "b: " << approx(tile.param.b(), 2) << "\n";
    std::size_t na = 0;
    std::size_t nb = 0;
    for (const QS3& len2 : squared_edge_lengths(tile.raw)) {
      if (len2 == a * a) ++na;
      else if (len2 == tile.param.b() * tile.param.b()) ++nb;
    }
    out << "edges: " << na << " x a + " << nb << " x (1-a)\n";
    out << "normalized edges: " << tile.normalized.size() << "\n";
    out << "area: " << approx(shoelace_area(tile.normalized)) << "\n";
    out << "simple: " << (is_simple(tile.normalized) ? "yes" : "no") << "\n";
    if (named) {
      if (const auto n = kite_count(*named)) out << "kites: " << *n << "\n";
    }
  } else {
    for (const Point& p : tile.normalized) out << to_string(p.x) << " " << to_string(p.y) << "\n";
  }
  if (!svg.empty()) write_svg(polygon_scene(tile.normalized), svg);
  return kOk;
}

int assemble_command(const std::string& spec_path, const std::string& svg, std::ostream& out) {
  const Assembly assembly = assemble(load_spec(spec_path));
  const Polygon outline = normalize_polygon(boundary(assembly));
  out << "kites: " << assembly.size() << "\n";
  out << "area: " << approx(shoelace_area(outline)) << "\n";
  out << "boundary edges: " << outline.size() << "\n";
  out << "signature: " << signature_text(canonical_signature(outline, SignatureMode::kSimilarity)) << "\n";
  for (NamedTile t : {NamedTile::kHat, NamedTile::kTurtle, NamedTile::kT01, NamedTile::kT11, NamedTile::kT10}) {
    const SimilarityResult sim = similarity_between(named_tile(t).normalized, outline);
    if (sim) out << "similar to: " << tile_name(t) << " (scale " << approx(sim.witness->scale) << ")\n";
  }
  if (!svg.empty()) write_svg(assembly_scene(assembly), svg);
  return kOk;
}

int search_command(const std::string& target, int n, std::size_t limit, std::ostream& out, std::ostream& err) {
  NamedTile tile;
  try {
    tile = parse_tile_name(target);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  if (n < 1) throw UsageError("--n must be positive");
  const Signature sig = canonical_signature(named_tile(tile).normalized, SignatureMode::kSimilarity);
  const SearchReport report = search_assembly_report(sig, n, limit);
  if (report.specs.empty()) {
    err << "no " << n << "-kite assembly matches " << target << " (" << report.states << " states)\n";
    return kFailed;
  }
  std::ostringstream header;
  header << report.specs.size() << " placement sets match " << target << " with " << n << " kites ("
         << report.states << " states); first shown";
  out << format_assembly_spec(report.specs.front(), header.str());
  return kOk;
}

int laves_command(const std::string& base, int radius, bool want_dual, const std::string& svg, std::ostream& out) {
  Patch patch;
  if (base == "tri") {
    patch = triangular_patch(radius);
  } else if (base == "3464") {
    patch = patch_3464(radius);
  } else {
    throw UsageError("--base must be tri or 3464");
  }
  out << "faces: " << patch.faces.size() << "\n";
  out << "interior vertices: " << patch.interior_vertices().size() << "\n";
  std::vector<Polygon> drawn = patch.faces;
  if (want_dual) {
    const DualPatch d = dual(patch);
    out << "dual faces: " << d.faces.size() << "\n";
    std::vector<Signature> kinds;
    for (const Polygon& f : d.faces) {
      Signature s = canonical_signature(f, SignatureMode::kCongruence);
      if (std::find(kinds.begin(), kinds.end(), s) == kinds.end()) kinds.push_back(std::move(s));
    }
    for (const Signature& s : kinds) out << "dual face: " << signature_text(s) << "\n";
    const SimilarityResult kite = similarity_between(laves_kite().polygon(), d.faces.front());
    if (kite) out << "kite scale: " << approx(kite.witness->scale) << "\n";
    drawn = d.faces;
  }
  if (!svg.empty()) write_svg(faces_scene(drawn), svg);
  return kOk;
}

int verify_command(const std::vector<std::string>& suites, std::ostream& out) {
  if (suites.empty()) throw UsageError("verify needs one of --all, --closure, --assemblies, --duals, --patches");
  bool ok = true;
  for (const auto& name : suites) {
    const SuiteReport report = run_suite(parse_suite(name));
    for (const Check& c : report.checks) {
      out << (c.passed ? "PASS " : "FAIL ") << c.name;
      if (!c.passed) out << ": " << c.detail;
      out << "\n";
    }
    ok = ok && report.passed();
  }
  return ok ? kOk : kFailed;
}

int anim_command(const std::string& from, const std::string& to, int frames, const std::string& dir,
                 std::ostream& out) {
  const auto names = animate(parse_qs3(from), parse_qs3(to), frames, dir);
  for (const auto& n : names) out << n << "\n";
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact constructions of the hat, turtle and Tile(a, 1-a) monotiles", "monotile"};
  app.require_subcommand(1);

  std::string a_text, name, svg;
  bool report = false;
  auto* tile = app.add_subcommand("tile", "Build a parametric or named tile");
  tile->add_option("--a", a_text, "Parameter a as a Q[sqrt3] expression");
  tile->add_option("--name", name, "hat, turtle, t01, t11 or t10");
  tile->add_option("--svg", svg, "Write the normalized outline as SVG");
  tile->add_flag("--report", report, "Print exact values with decimal approximations");

  auto* kite = app.add_subcommand("kite", "Laves-kite assemblies");
  kite->require_subcommand(1);
  std::string spec_path;
  auto* assemble_cmd = kite->add_subcommand("assemble", "Assemble a reflection spec");
  assemble_cmd->add_option("--spec", spec_path, "Spec file, or - for stdin")->required();
  assemble_cmd->add_option("--svg", svg, "Write kites and outline as SVG");
  std::string target;
  int n = 0;
  std::size_t limit = 1000000;
  auto* search_cmd = kite->add_subcommand("search", "Search reflection specs matching a named tile");
  search_cmd->add_option("--target", target, "hat, turtle, t01, t11 or t10")->required();
  search_cmd->add_option("--n", n, "Number of kites")->required();
  search_cmd->add_option("--limit", limit, "State limit")->capture_default_str();

  std::string base;
  int radius = 0;
  bool want_dual = false;
  auto* laves = app.add_subcommand("laves", "Regular/semiregular patches and their duals");
  laves->add_option("--base", base, "tri or 3464")->required();
  laves->add_option("--radius", radius, "Patch radius")->required();
  laves->add_flag("--dual", want_dual, "Build the dual patch");
  laves->add_option("--svg", svg, "Write the faces as SVG");

  std::vector<std::string> suites;
  auto* verify = app.add_subcommand("verify", "Run invariant suites against the shipped fixtures");
  for (const char* s : {"all", "closure", "assemblies", "duals", "patches"}) {
    verify->add_flag_callback(std::string("--") + s, [&suites, s] { suites.emplace_back(s); });
  }

  std::string from = "1/1000", to = "999/1000", out_dir;
  int frames = 20;
  auto* anim = app.add_subcommand("anim", "Write SVG frames sweeping the parameter a");
  anim->add_option("--from", from)->capture_default_str();
  anim->add_option("--to", to)->capture_default_str();
  anim->add_option("--frames", frames)->capture_default_str();
  anim->add_option("--out", out_dir, "Output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*tile) return tile_command(a_text, name, svg, report, out);
    if (*assemble_cmd) return assemble_command(spec_path, svg, out);
    if (*search_cmd) return search_command(target, n, limit, out, err);
    if (*laves) return laves_command(base, radius, want_dual, svg, out);
    if (*verify) return verify_command(suites, out);
    if (*anim) return anim_command(from, to, frames, out_dir, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    // Out-of-range flag values.
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}

}  // namespace monotile::cli
