#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "monotile/polygon.hpp"

namespace monotile {

enum class SignatureMode { kCongruence, kSimilarity };

/// Canonical description of a normalized polygon up to isometry (congruence)
/// or isometry plus uniform scaling (similarity).
///
/// Items are (squared edge length, interior angle class at the edge's end
/// vertex), read in traversal order. The canonical form is the
/// lexicographically smallest item sequence over every cyclic rotation in
/// both traversal directions. In similarity mode each candidate sequence is
/// divided by its own first squared length before comparison.
struct Signature {
  SignatureMode mode = SignatureMode::kCongruence;
  std::vector<std::pair<QS3, int>> items;

  std::vector<int> angles() const;

  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Throws UnsupportedGeometry when an interior angle is not a multiple of 30
/// degrees.
Signature canonical_signature(const Polygon& poly, SignatureMode mode);

bool congruent(const Polygon& p, const Polygon& q);
bool similar(const Polygon& p, const Polygon& q);

/// Exact witness: q = map(scale * p) vertex for vertex (up to cyclic order).
struct SimilarityWitness {
  QS3 scale;
  Isometry map;
  bool reflected = false;
};

struct SimilarityResult {
  enum class Status {
    kNotSimilar,
    /// Signatures agree but the linear scale factor is not in Q[sqrt3].
    kSimilarIrrationalScale,
    kSimilar,
  };

  Status status = Status::kNotSimilar;
  std::optional<SimilarityWitness> witness;
  /// Ratio of squared lengths (q over p) when signatures agree.
  std::optional<QS3> squared_scale;

  explicit operator bool() const { return status == Status::kSimilar; }
};

SimilarityResult similarity_between(const Polygon& p, const Polygon& q);

}  // namespace monotile
