#pragma once

#include <array>
#include <optional>
#include <ostream>
#include <string>

#include "monotile/qs3.hpp"

namespace monotile {

/// Exact planar point (also used as a displacement vector).
struct Point {
  QS3 x;
  QS3 y;

  Point& operator+=(const Point& o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  Point& operator-=(const Point& o) {
    x -= o.x;
    y -= o.y;
    return *this;
  }
  friend Point operator+(Point a, const Point& b) { return a += b; }
  friend Point operator-(Point a, const Point& b) { return a -= b; }
  friend Point operator-(const Point& a) { return {-a.x, -a.y}; }
  friend Point operator*(const QS3& s, const Point& p) { return {s * p.x, s * p.y}; }
  friend bool operator==(const Point&, const Point&) = default;

  bool is_zero() const { return x.is_zero() && y.is_zero(); }
};

using Vec2 = Point;

QS3 dot(const Vec2& u, const Vec2& v);
QS3 cross(const Vec2& u, const Vec2& v);
inline QS3 squared_length(const Vec2& v) { return dot(v, v); }
inline QS3 squared_distance(const Point& a, const Point& b) { return squared_length(b - a); }

/// Orientation of (a, b, c): +1 counter-clockwise, -1 clockwise, 0 collinear.
int orient(const Point& a, const Point& b, const Point& c);

/// Order on the representation, for use as a map key.
struct PointLess {
  bool operator()(const Point& a, const Point& b) const;
};

std::size_t hash_value(const Point& p);
struct PointHash {
  std::size_t operator()(const Point& p) const { return hash_value(p); }
};

std::string to_string(const Point& p);
std::ostream& operator<<(std::ostream& os, const Point& p);

/// Exact cos/sin of k*30 degrees. Every value lies in {0, +-1/2, +-sqrt3/2, +-1}.
QS3 cos30(int k);
QS3 sin30(int k);
/// Unit vector at heading k*30 degrees.
Vec2 unit_direction(int k);

/// Rotation of p about center by k*30 degrees, counter-clockwise for k > 0.
Point rotate_about(const Point& p, const Point& center, int k);
Vec2 rotate_vector(const Vec2& v, int k);

class Line {
 public:
  /// Throws DomainError when direction is the zero vector.
  Line(Point anchor, Vec2 direction);
  static Line through(const Point& a, const Point& b) { return Line(a, b - a); }

  const Point& anchor() const { return anchor_; }
  const Vec2& direction() const { return direction_; }

  /// Line through `through`, perpendicular / parallel to this one.
  Line perpendicular(const Point& through) const;
  Line parallel(const Point& through) const;

 private:
  Point anchor_;
  Vec2 direction_;
};

Point reflect_across(const Point& p, const Line& l);

/// Unique intersection point, or nullopt for parallel or coincident lines.
std::optional<Point> line_intersection(const Line& l1, const Line& l2);

/// start + dist * dir. Throws DomainError unless dir is an exact unit vector.
Point point_along(const Point& start, const Vec2& dir, const QS3& dist);

/// Interior-angle class k (angle = k*30 degrees, 0 <= k < 12): rotating u
/// counter-clockwise by k*30 degrees yields a positive multiple of v. Nullopt
/// when the angle is not a multiple of 30 degrees. Throws DomainError on a
/// zero vector.
std::optional<int> angle_class(const Vec2& u, const Vec2& v);

/// Heading class of a non-zero vector relative to +x, or nullopt.
inline std::optional<int> heading_class(const Vec2& v) { return angle_class({QS3(1), QS3(0)}, v); }

/// Rigid motion x -> M x + t with M orthogonal.
class Isometry {
 public:
  /// Identity.
  Isometry();
  /// Throws DomainError unless M^T M = I exactly.
  Isometry(QS3 m00, QS3 m01, QS3 m10, QS3 m11, QS3 tx, QS3 ty);

  static Isometry identity() { return {}; }
  static Isometry translation(const Vec2& t);
  /// Rotation by k*30 degrees about `center`.
  static Isometry rotation(const Point& center, int k);
  static Isometry reflection(const Line& l);

  Point apply(const Point& p) const;
  Vec2 apply_linear(const Vec2& v) const;
  Point operator()(const Point& p) const { return apply(p); }

  /// (*this)(other(x)).
  Isometry compose(const Isometry& other) const;
  Isometry inverse() const;

  QS3 det() const;
  bool is_reflection() const { return det().sign() < 0; }

  const QS3& m00() const { return m_[0]; }
  const QS3& m01() const { return m_[1]; }
  const QS3& m10() const { return m_[2]; }
  const QS3& m11() const { return m_[3]; }
  const QS3& tx() const { return t_[0]; }
  const QS3& ty() const { return t_[1]; }

  friend bool operator==(const Isometry&, const Isometry&) = default;

  static bool is_orthogonal(const QS3& m00, const QS3& m01, const QS3& m10, const QS3& m11);

 private:
  struct Unchecked {};
  Isometry(Unchecked, std::array<QS3, 4> m, std::array<QS3, 2> t);

  std::array<QS3, 4> m_;
  std::array<QS3, 2> t_;
};

std::ostream& operator<<(std::ostream& os, const Isometry& g);

}  // namespace monotile
