#include "monotile/geom.hpp"

#include "monotile/errors.hpp"

namespace monotile {

QS3 dot(const Vec2& u, const Vec2& v) { return u.x * v.x + u.y * v.y; }

QS3 cross(const Vec2& u, const Vec2& v) { return u.x * v.y - u.y * v.x; }

int orient(const Point& a, const Point& b, const Point& c) { return cross(b - a, c - a).sign(); }

bool PointLess::operator()(const Point& a, const Point& b) const {
  if (QS3::structural_less(a.x, b.x)) return true;
  if (QS3::structural_less(b.x, a.x)) return false;
  return QS3::structural_less(a.y, b.y);
}

std::size_t hash_value(const Point& p) { return hash_value(p.x) * 1000003u ^ hash_value(p.y); }

std::string to_string(const Point& p) { return "(" + to_string(p.x) + ", " + to_string(p.y) + ")"; }

std::ostream& operator<<(std::ostream& os, const Point& p) { return os << to_string(p); }

namespace {

int mod12(int k) { return ((k % 12) + 12) % 12; }

}  // namespace

QS3 cos30(int k) {
  switch (mod12(k)) {
    case 0: return QS3(1);
    case 1: case 11: return QS3(Rational(0), Rational(1, 2));
    case 2: case 10: return QS3::fraction(1, 2);
    case 3: case 9: return QS3(0);
    case 4: case 8: return QS3::fraction(-1, 2);
    case 5: case 7: return QS3(Rational(0), Rational(-1, 2));
    default: return QS3(-1);
  }
}

QS3 sin30(int k) { return cos30(k - 3); }

Vec2 unit_direction(int k) { return {cos30(k), sin30(k)}; }

Vec2 rotate_vector(const Vec2& v, int k) {
  const QS3 c = cos30(k);
  const QS3 s = sin30(k);
  return {c * v.x - s * v.y, s * v.x + c * v.y};
}

Point rotate_about(const Point& p, const Point& center, int k) {
  return center + rotate_vector(p - center, k);
}

Line::Line(Point anchor, Vec2 direction) : anchor_(std::move(anchor)), direction_(std::move(direction)) {
  if (direction_.is_zero()) throw DomainError("line direction must be non-zero");
}

Line Line::perpendicular(const Point& through) const { return Line(through, rotate_vector(direction_, 3)); }

Line Line::parallel(const Point& through) const { return Line(through, direction_); }

Point reflect_across(const Point& p, const Line& l) {
  const Vec2& d = l.direction();
  const Vec2 w = p - l.anchor();
  // Foot of the perpendicular: anchor + (w.d / d.d) d; mirror = 2 foot - p.
  const QS3 t = dot(w, d) / squared_length(d);
  const Point foot = l.anchor() + t * d;
  return QS3(2) * foot - p;
}

std::optional<Point> line_intersection(const Line& l1, const Line& l2) {
  const QS3 denom = cross(l1.direction(), l2.direction());
  if (denom.is_zero()) return std::nullopt;
  const QS3 t = cross(l2.anchor() - l1.anchor(), l2.direction()) / denom;
  return l1.anchor() + t * l1.direction();
}

Point point_along(const Point& start, const Vec2& dir, const QS3& dist) {
  if (squared_length(dir) != QS3(1)) throw DomainError("point_along requires an exact unit direction");
  return start + dist * dir;
}

std::optional<int> angle_class(const Vec2& u, const Vec2& v) {
  if (u.is_zero() || v.is_zero()) throw DomainError("angle_class of a zero vector");
  for (int k = 0; k < 12; ++k) {
    const Vec2 r = rotate_vector(u, k);
    if (cross(r, v).is_zero() && dot(r, v).sign() > 0) return k;
  }
  return std::nullopt;
}

Isometry::Isometry() : m_{QS3(1), QS3(0), QS3(0), QS3(1)}, t_{QS3(0), QS3(0)} {}

Isometry::Isometry(Unchecked, std::array<QS3, 4> m, std::array<QS3, 2> t) : m_(std::move(m)), t_(std::move(t)) {}

Isometry::Isometry(QS3 m00, QS3 m01, QS3 m10, QS3 m11, QS3 tx, QS3 ty)
    : m_{std::move(m00), std::move(m01), std::move(m10), std::move(m11)}, t_{std::move(tx), std::move(ty)} {
  if (!is_orthogonal(m_[0], m_[1], m_[2], m_[3])) throw DomainError("isometry matrix is not orthogonal");
}

bool Isometry::is_orthogonal(const QS3& m00, const QS3& m01, const QS3& m10, const QS3& m11) {
  // Columns are unit length and orthogonal.
  return m00 * m00 + m10 * m10 == QS3(1) && m01 * m01 + m11 * m11 == QS3(1) &&
         (m00 * m01 + m10 * m11).is_zero();
}

Isometry Isometry::translation(const Vec2& t) {
  return Isometry(Unchecked{}, {QS3(1), QS3(0), QS3(0), QS3(1)}, {t.x, t.y});
}

Isometry Isometry::rotation(const Point& center, int k) {
  const QS3 c = cos30(k);
  const QS3 s = sin30(k);
  // x -> R(x - center) + center
  const Point t = center - rotate_vector(center, k);
  return Isometry(Unchecked{}, {c, -s, s, c}, {t.x, t.y});
}

Isometry Isometry::reflection(const Line& l) {
  const Vec2& d = l.direction();
  const QS3 n = squared_length(d);
  // Householder-style mirror about direction d: (1/|d|^2) [[dx^2-dy^2, 2dxdy],[2dxdy, dy^2-dx^2]].
  const QS3 a = (d.x * d.x - d.y * d.y) / n;
  const QS3 b = QS3(2) * d.x * d.y / n;
  const Isometry linear(Unchecked{}, {a, b, b, -a}, {QS3(0), QS3(0)});
  const Point t = l.anchor() - linear.apply_linear(l.anchor());
  return Isometry(Unchecked{}, {a, b, b, -a}, {t.x, t.y});
}

Vec2 Isometry::apply_linear(const Vec2& v) const {
  return {m_[0] * v.x + m_[1] * v.y, m_[2] * v.x + m_[3] * v.y};
}

Point Isometry::apply(const Point& p) const {
  Point r = apply_linear(p);
  r.x += t_[0];
  r.y += t_[1];
  return r;
}

Isometry Isometry::compose(const Isometry& o) const {
  std::array<QS3, 4> m{m_[0] * o.m_[0] + m_[1] * o.m_[2], m_[0] * o.m_[1] + m_[1] * o.m_[3],
                       m_[2] * o.m_[0] + m_[3] * o.m_[2], m_[2] * o.m_[1] + m_[3] * o.m_[3]};
  const Point t = apply(Point{o.t_[0], o.t_[1]});
  return Isometry(Unchecked{}, std::move(m), {t.x, t.y});
}

Isometry Isometry::inverse() const {
  // M^-1 = M^T for orthogonal M.
  const Isometry linear(Unchecked{}, {m_[0], m_[2], m_[1], m_[3]}, {QS3(0), QS3(0)});
  const Point t = -linear.apply_linear(Point{t_[0], t_[1]});
  return Isometry(Unchecked{}, {m_[0], m_[2], m_[1], m_[3]}, {t.x, t.y});
}

QS3 Isometry::det() const { return m_[0] * m_[3] - m_[1] * m_[2]; }

std::ostream& operator<<(std::ostream& os, const Isometry& g) {
  return os << "[" << g.m00() << ", " << g.m01() << "; " << g.m10() << ", " << g.m11() << " | " << g.tx()
            << ", " << g.ty() << "]";
}

}  // namespace monotile
