#include "monotile/tilefamily.hpp"

#include <algorithm>
#include <sstream>

#include "monotile/errors.hpp"
#include "monotile/signature.hpp"

namespace monotile {

TileParam::TileParam(QS3 a) : a_(std::move(a)) {
  if (a_.sign() < 0 || (QS3(1) - a_).sign() < 0) throw DomainError("tile parameter a must lie in [0, 1]");
}

SignTable parse_sign_table(const std::string& text) {
  SignTable table;
  std::array<bool, 6> seen{};
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string label, sign, extra;
    if (!(fields >> label)) continue;
    if (!(fields >> sign) || (fields >> extra) || label.size() != 1 || (sign != "+" && sign != "-")) {
      throw ParseError("expected '<label> <+|->' on line " + std::to_string(line_no), line_no);
    }
    std::size_t slot = SignTable::kLabels.size();
    for (std::size_t i = 0; i < SignTable::kLabels.size(); ++i) {
      if (SignTable::kLabels[i] == label[0]) slot = i;
    }
    if (slot == SignTable::kLabels.size() || seen[slot]) {
      throw ParseError("unknown or repeated step label '" + label + "'", line_no);
    }
    seen[slot] = true;
    table.signs[slot] = sign == "+" ? 1 : -1;
  }
  for (bool s : seen) {
    if (!s) throw ParseError("sign table needs all six steps D F G H J L", line_no);
  }
  return table;
}

std::string format_sign_table(const SignTable& table) {
  std::string out;
  for (std::size_t i = 0; i < table.signs.size(); ++i) {
    out += SignTable::kLabels[i];
    out += table.signs[i] > 0 ? " +\n" : " -\n";
  }
  return out;
}

const SignTable& canonical_sign_table() {
  // Frozen output of derive_sign_table(); the regeneration test keeps the
  // shipped data/sign_table.txt and this constant in sync.
  static const SignTable table{{-1, +1, -1, -1, +1, +1}};
  return table;
}

Polygon build_raw_tile(const TileParam& param, const SignTable& table) {
  const QS3& a = param.a();
  const QS3 b = param.b();
  const auto& s = table.signs;

  // Headings are tracked as integers so degenerate edges (a = 0 or b = 0)
  // still have a direction.
  std::vector<Point> v;
  v.reserve(14);
  const Point A{};
  v.push_back(A);
  int heading = 0;
  const Point B = point_along(A, unit_direction(heading), a);
  v.push_back(B);
  // Ray AB meets the circle of radius a about B.
  const Point C = point_along(B, unit_direction(heading), a);
  v.push_back(C);
  // 120 degrees clockwise from B about C.
  const Point D = rotate_about(B, C, -4);
  heading += 2;
  v.push_back(D);
  // Perpendicular to CD through D, radius 1-a.
  heading += 3 * s[0];
  const Point E = point_along(D, unit_direction(heading), b);
  v.push_back(E);
  // Second 120-degree clockwise angle from D about E.
  const Point F = rotate_about(D, E, -4);
  heading += 2;
  v.push_back(F);
  // Perpendicular to EF through F, radius a.
  heading += 3 * s[1];
  const Point G = point_along(F, unit_direction(heading), a);
  v.push_back(G);
  // Parallel to AB through G, radius a.
  heading = s[2] > 0 ? 0 : 6;
  const Point H = point_along(G, unit_direction(heading), a);
  v.push_back(H);
  // Perpendicular to GH through H, radius 1-a.
  heading += 3 * s[3];
  const Point I = point_along(H, unit_direction(heading), b);
  v.push_back(I);
  // 120 degrees clockwise from H about I.
  const Point J = rotate_about(H, I, -4);
  heading += 2;
  v.push_back(J);
  // Perpendicular to IJ through J, radius a.
  heading += 3 * s[4];
  const Point K = point_along(J, unit_direction(heading), a);
  v.push_back(K);
  // 120 degrees counter-clockwise from J about K.
  const Point L = rotate_about(J, K, 4);
  heading -= 2;
  v.push_back(L);
  // Perpendicular to KL through L, radius 1-a.
  heading += 3 * s[5];
  const Point M = point_along(L, unit_direction(heading), b);
  v.push_back(M);
  // 120 degrees counter-clockwise from L about M.
  const Point N = rotate_about(L, M, 4);
  v.push_back(N);
  return Polygon(std::move(v));
}

TilePolygon build_tile(const TileParam& param, const SignTable& table) {
  Polygon raw = build_raw_tile(param, table);
  Polygon normalized = normalize_polygon(raw);
  return TilePolygon{std::move(raw), std::move(normalized), param};
}

QS3 closure_gap(const TileParam& param, const SignTable& table) {
  const Polygon raw = build_raw_tile(param, table);
  return squared_length(raw[0] - raw[13]) - param.a() * param.a();
}

std::array<QS3, 3> closure_gap_polynomial(const SignTable& table) {
  // N(a) = N0 + a N1 since every step is QS3-linear in a.
  const Point n0 = build_raw_tile(TileParam(QS3(0)), table)[13];
  const Point n1 = build_raw_tile(TileParam(QS3(1)), table)[13] - n0;
  // |N0 + a N1|^2 - a^2
  return {squared_length(n0), QS3(2) * dot(n0, n1), squared_length(n1) - QS3(1)};
}

std::vector<SignTable> derive_sign_table() {
  const TileParam third(QS3::fraction(1, 3));
  const TileParam half(QS3::fraction(1, 2));
  const TileParam probe(QS3::fraction(37, 100));

  std::vector<SignTable> survivors;
  for (int mask = 0; mask < 64; ++mask) {
    SignTable table;
    for (int i = 0; i < 6; ++i) table.signs[static_cast<std::size_t>(i)] = (mask >> (5 - i)) & 1 ? -1 : 1;
    if (!closure_gap(third, table).is_zero() || !closure_gap(half, table).is_zero()) continue;
    if (!is_simple(build_raw_tile(probe, table))) continue;
    survivors.push_back(table);
  }
  if (survivors.empty()) throw Error("no sign table closes the construction");
  std::stable_partition(survivors.begin(), survivors.end(), [&](const SignTable& t) {
    return shoelace_area(build_raw_tile(probe, t)).sign() > 0;
  });
  return survivors;
}

NamedTile parse_tile_name(std::string_view name) {
  if (name == "hat") return NamedTile::kHat;
  if (name == "turtle") return NamedTile::kTurtle;
  if (name == "t01") return NamedTile::kT01;
  if (name == "t11") return NamedTile::kT11;
  if (name == "t10") return NamedTile::kT10;
  throw DomainError("unknown tile name '" + std::string(name) + "' (expected hat, turtle, t01, t11 or t10)");
}

std::string_view tile_name(NamedTile tile) {
  switch (tile) {
    case NamedTile::kHat: return "hat";
    case NamedTile::kTurtle: return "turtle";
    case NamedTile::kT01: return "t01";
    case NamedTile::kT11: return "t11";
    case NamedTile::kT10: return "t10";
  }
  return "";
}

QS3 named_parameter(NamedTile tile) {
  switch (tile) {
    // 1/(1+sqrt3) rationalized.
    case NamedTile::kHat: return QS3(Rational(-1, 2), Rational(1, 2));
    // sqrt3/(1+sqrt3) rationalized.
    case NamedTile::kTurtle: return QS3(Rational(3, 2), Rational(-1, 2));
    case NamedTile::kT01: return QS3(0);
    case NamedTile::kT11: return QS3::fraction(1, 2);
    case NamedTile::kT10: return QS3(1);
  }
  return QS3(0);
}

TilePolygon named_tile(NamedTile tile) { return build_tile(TileParam(named_parameter(tile))); }

TilePolygon named_tile(std::string_view name) { return named_tile(parse_tile_name(name)); }

std::optional<int> kite_count(NamedTile tile) {
  switch (tile) {
    case NamedTile::kHat: return 8;
    case NamedTile::kTurtle: return 10;
    case NamedTile::kT01: return 12;
    case NamedTile::kT10: return 24;
    case NamedTile::kT11: return std::nullopt;
  }
  return std::nullopt;
}

bool verify_prop2(const TilePolygon& tile, const QS3& k) {
  if (k.sign() <= 0) throw DomainError("similarity constant must be positive");
  const SimilarityResult r = similarity_between(tile.normalized, scaled(tile.normalized, k));
  return r.status == SimilarityResult::Status::kSimilar && r.witness->scale == k;
}

}  // namespace monotile
