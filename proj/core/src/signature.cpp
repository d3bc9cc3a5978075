#include "monotile/signature.hpp"

#include <algorithm>

#include "monotile/errors.hpp"

namespace monotile {

namespace {

using Item = std::pair<QS3, int>;

int compare_items(const std::vector<Item>& a, const std::vector<Item>& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    const auto c = a[i].first <=> b[i].first;
    if (c < 0) return -1;
    if (c > 0) return 1;
    if (a[i].second != b[i].second) return a[i].second < b[i].second ? -1 : 1;
  }
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return 0;
}

Polygon counter_clockwise(const Polygon& poly) {
  return shoelace_area(poly).sign() < 0 ? reversed(poly) : poly;
}

}  // namespace

std::vector<int> Signature::angles() const {
  std::vector<int> out;
  out.reserve(items.size());
  for (const auto& item : items) out.push_back(item.second);
  return out;
}

Signature canonical_signature(const Polygon& input, SignatureMode mode) {
  const Polygon poly = counter_clockwise(input);
  const std::size_t n = poly.size();
  const auto angles = interior_angle_classes(poly);
  if (!angles) throw UnsupportedGeometry("interior angle is not a multiple of 30 degrees");
  const std::vector<QS3> lengths = squared_edge_lengths(poly);

  std::vector<Item> best;
  std::vector<Item> candidate(n);
  for (int direction = 0; direction < 2; ++direction) {
    for (std::size_t start = 0; start < n; ++start) {
      for (std::size_t m = 0; m < n; ++m) {
        if (direction == 0) {
          const std::size_t e = (start + m) % n;
          candidate[m] = {lengths[e], (*angles)[(e + 1) % n]};
        } else {
          // Backwards from `start`: edge start-1 .. ends at vertex start-1.
          const std::size_t e = (start + 2 * n - 1 - m) % n;
          candidate[m] = {lengths[e], (*angles)[e]};
        }
      }
      if (mode == SignatureMode::kSimilarity) {
        const QS3 unit = candidate[0].first;
        for (auto& item : candidate) item.first /= unit;
      }
      if (best.empty() || compare_items(candidate, best) < 0) best = candidate;
    }
  }
  return Signature{mode, std::move(best)};
}

bool congruent(const Polygon& p, const Polygon& q) {
  return canonical_signature(p, SignatureMode::kCongruence) == canonical_signature(q, SignatureMode::kCongruence);
}

bool similar(const Polygon& p, const Polygon& q) {
  return canonical_signature(p, SignatureMode::kSimilarity) == canonical_signature(q, SignatureMode::kSimilarity);
}

SimilarityResult similarity_between(const Polygon& p, const Polygon& q) {
  SimilarityResult result;
  if (p.size() != q.size()) return result;
  if (canonical_signature(p, SignatureMode::kSimilarity) != canonical_signature(q, SignatureMode::kSimilarity)) {
    return result;
  }

  const std::size_t n = p.size();
  const Vec2 p_edge = p[1] - p[0];
  const QS3 p_len2 = squared_length(p_edge);
  bool irrational = false;

  for (int reflect = 0; reflect < 2; ++reflect) {
    for (std::size_t j = 0; j < n; ++j) {
      auto q_at = [&](std::size_t i) -> const Point& {
        return reflect == 0 ? q.vertex(j + i) : q.vertex(j + n * 2 - i);
      };
      const Vec2 w = q_at(1) - q_at(0);
      const QS3 ratio = squared_length(w) / p_len2;
      const auto s = qs3_sqrt(ratio);
      if (!s) {
        irrational = true;
        result.squared_scale = ratio;
        continue;
      }
      const Vec2 u = *s * p_edge;
      const QS3 u2 = squared_length(u);
      std::optional<Isometry> linear;
      try {
        if (reflect == 0) {
          const QS3 c = dot(u, w) / u2;
          const QS3 sn = cross(u, w) / u2;
          linear = Isometry(c, -sn, sn, c, QS3(0), QS3(0));
        } else {
          const QS3 c = (u.x * w.x - u.y * w.y) / u2;
          const QS3 sn = (u.y * w.x + u.x * w.y) / u2;
          linear = Isometry(c, sn, sn, -c, QS3(0), QS3(0));
        }
      } catch (const DomainError&) {
        continue;
      }
      const Point t = q_at(0) - linear->apply(*s * p[0]);
      Isometry map(linear->m00(), linear->m01(), linear->m10(), linear->m11(), t.x, t.y);

      bool ok = true;
      for (std::size_t i = 0; i < n && ok; ++i) ok = map(*s * p[i]) == q_at(i);
      if (!ok) continue;

      result.status = SimilarityResult::Status::kSimilar;
      result.squared_scale = ratio;
      result.witness = SimilarityWitness{*s, std::move(map), reflect == 1};
      return result;
    }
  }
  if (irrational) result.status = SimilarityResult::Status::kSimilarIrrationalScale;
  return result;
}

}  // namespace monotile
