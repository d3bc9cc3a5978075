#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "monotile/polygon.hpp"

namespace monotile {

/// Shape parameter a in [0, 1]; the second edge length is b = 1 - a.
class TileParam {
 public:
  /// Throws DomainError when a is outside [0, 1].
  explicit TileParam(QS3 a);

  const QS3& a() const { return a_; }
  QS3 b() const { return QS3(1) - a_; }

 private:
  QS3 a_;
};

/// The six two-way choices of the construction. Each perpendicular step turns
/// the current heading by +90 degrees (sign +1) or -90 degrees (sign -1); the
/// parallel step at G runs along AB (+1) or against it (-1). Steps are labeled
/// by the point the auxiliary line passes through.
struct SignTable {
  static constexpr std::array<char, 6> kLabels{'D', 'F', 'G', 'H', 'J', 'L'};

  std::array<int, 6> signs{};

  friend bool operator==(const SignTable&, const SignTable&) = default;
};

/// Six lines `<label> <+|->`; `#` comments. Throws ParseError.
SignTable parse_sign_table(const std::string& text);
std::string format_sign_table(const SignTable& table);

/// The table shipped with the library (the unique survivor of
/// derive_sign_table).
const SignTable& canonical_sign_table();

/// Raw 14-gon A..N of Tile(a, 1-a) and its normalized outline.
struct TilePolygon {
  static constexpr std::string_view kLabels = "ABCDEFGHIJKLMN";

  Polygon raw;
  Polygon normalized;
  TileParam param;
};

/// Replays the ruler-and-compass construction: A=(0,0), B=(a,0), then each
/// vertex by rotation about the previous one or a step of length a / 1-a
/// along a 30-degree heading. Builds the raw 14-gon for any a in [0, 1].
Polygon build_raw_tile(const TileParam& a, const SignTable& table = canonical_sign_table());

/// Raw polygon plus normalized outline. Throws DegeneratePolygon only if the
/// table is broken.
TilePolygon build_tile(const TileParam& a, const SignTable& table = canonical_sign_table());

/// Squared length of the closing edge NA minus a^2; zero iff the outline closes
/// with an a-length edge.
QS3 closure_gap(const TileParam& a, const SignTable& table = canonical_sign_table());

/// Coefficients (c0, c1, c2) of the closing gap |NA|^2 - a^2 as a polynomial
/// in a, recovered from the affine dependence of N on a.
std::array<QS3, 3> closure_gap_polynomial(const SignTable& table = canonical_sign_table());

/// Tables for which the outline closes with |NA| = a at two independent
/// parameters and the raw polygon is simple at a = 37/100. Canonical (positive
/// area) first. Throws Error when nothing survives.
std::vector<SignTable> derive_sign_table();

enum class NamedTile { kHat, kTurtle, kT01, kT11, kT10 };

/// hat, turtle, t01, t11, t10. Throws DomainError for unknown names.
NamedTile parse_tile_name(std::string_view name);
std::string_view tile_name(NamedTile tile);
QS3 named_parameter(NamedTile tile);
TilePolygon named_tile(NamedTile tile);
TilePolygon named_tile(std::string_view name);

/// Kite count of the matching Laves-kite assembly: 8, 10, 12, 24 (nullopt for t11).
std::optional<int> kite_count(NamedTile tile);

/// True iff the normalized tile and its copy scaled by k are similar with an
/// exact witness of scale k. Throws DomainError for k <= 0.
bool verify_prop2(const TilePolygon& tile, const QS3& k);

}  // namespace monotile
