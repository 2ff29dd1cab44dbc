#include "xsat/geometry.hpp"

#include <cctype>

namespace xsat {

namespace {

void skip_ws(std::string_view s, size_t& pos) {
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
}

void expect(std::string_view s, size_t& pos, char c) {
  skip_ws(s, pos);
  if (pos >= s.size() || s[pos] != c)
    throw ParseError(std::string("expected '") + c + "'", pos);
  ++pos;
}

}  // namespace

Scalar dot(const Vec3& v, const Vec3& w) { return v.x * w.x + v.y * w.y + v.z * w.z; }

Vec3 cross(const Vec3& v, const Vec3& w) {
  return {v.y * w.z - v.z * w.y, v.z * w.x - v.x * w.z, v.x * w.y - v.y * w.x};
}

std::string Vec3::str() const {
  return "[" + x.str() + ", " + y.str() + ", " + z.str() + "]";
}

Vec3 Vec3::parse_prefix(std::string_view s, size_t& pos) {
  expect(s, pos, '[');
  Scalar x = Scalar::parse_prefix(s, pos);
  expect(s, pos, ',');
  Scalar y = Scalar::parse_prefix(s, pos);
  expect(s, pos, ',');
  Scalar z = Scalar::parse_prefix(s, pos);
  expect(s, pos, ']');
  return {std::move(x), std::move(y), std::move(z)};
}

Vec3 Vec3::parse(std::string_view text) {
  size_t pos = 0;
  Vec3 v = parse_prefix(text, pos);
  skip_ws(text, pos);
  if (pos != text.size()) throw ParseError("trailing input after vector", pos);
  return v;
}

ProjPoint::ProjPoint(const Vec3& rep) : rep_(rep) {
  if (rep_.is_zero()) throw FieldError("projective point from the zero vector");
  const Scalar& lead = !rep_.x.is_zero() ? rep_.x : (!rep_.y.is_zero() ? rep_.y : rep_.z);
  Scalar inv = lead.inverse();
  rep_ = {inv * rep_.x, inv * rep_.y, inv * rep_.z};
}

std::string ProjPoint::str() const {
  return "<" + rep_.x.str() + " : " + rep_.y.str() + " : " + rep_.z.str() + ">";
}

ProjPoint ProjPoint::parse_prefix(std::string_view s, size_t& pos) {
  expect(s, pos, '<');
  Scalar x = Scalar::parse_prefix(s, pos);
  expect(s, pos, ':');
  Scalar y = Scalar::parse_prefix(s, pos);
  expect(s, pos, ':');
  Scalar z = Scalar::parse_prefix(s, pos);
  expect(s, pos, '>');
  return ProjPoint(Vec3{std::move(x), std::move(y), std::move(z)});
}

ProjPoint ProjPoint::parse(std::string_view text) {
  size_t pos = 0;
  ProjPoint p = parse_prefix(text, pos);
  skip_ws(text, pos);
  if (pos != text.size()) throw ParseError("trailing input after point", pos);
  return p;
}

std::optional<ProjPoint> proj_cross(const ProjPoint& p, const ProjPoint& q) {
  if (p == q) return std::nullopt;
  return ProjPoint(cross(p.rep(), q.rep()));
}

Mat3 Mat3::identity() {
  return Mat3{{Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}}};
}

Mat3 Mat3::transpose() const {
  return Mat3{{Vec3{rows[0].x, rows[1].x, rows[2].x},
               Vec3{rows[0].y, rows[1].y, rows[2].y},
               Vec3{rows[0].z, rows[1].z, rows[2].z}}};
}

Scalar Mat3::det() const { return dot(rows[0], cross(rows[1], rows[2])); }

Mat3 operator*(const Mat3& a, const Mat3& b) {
  Mat3 bt = b.transpose();
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    r.rows[i] = {dot(a.rows[i], bt.rows[0]), dot(a.rows[i], bt.rows[1]),
                 dot(a.rows[i], bt.rows[2])};
  return r;
}

Vec3 operator*(const Mat3& a, const Vec3& v) {
  return {dot(a.rows[0], v), dot(a.rows[1], v), dot(a.rows[2], v)};
}

Mat3 rational_rotation(const mpq_class& p, const mpq_class& q, const mpq_class& r) {
  Scalar sp(p), sq(q), sr(r);
  Mat3 s{{Vec3{0, sr, -sq}, Vec3{-sr, 0, sp}, Vec3{sq, -sp, 0}}};
  Mat3 id = Mat3::identity();
  Mat3 a;  // I + S
  Mat3 m;  // I - S
  for (int i = 0; i < 3; ++i) {
    a.rows[i] = id.rows[i] + s.rows[i];
    m.rows[i] = id.rows[i] - s.rows[i];
  }
  // inverse of I + S via the adjugate; det = 1 + p^2 + q^2 + r^2 > 0
  Scalar d = a.det();
  Mat3 at = a.transpose();
  Mat3 inv;
  inv.rows[0] = Scalar(1) / d * cross(at.rows[1], at.rows[2]);
  inv.rows[1] = Scalar(1) / d * cross(at.rows[2], at.rows[0]);
  inv.rows[2] = Scalar(1) / d * cross(at.rows[0], at.rows[1]);
  return m * inv;
}

std::array<Vec3, 3> orthogonal_basis(const std::array<mpq_class, 3>& skew,
                                     const std::array<mpq_class, 3>& scales) {
  std::array<mpq_class, 3> sc = scales;
  mpq_class prod = sc[0] * sc[1] * sc[2];
  if (prod == 0) throw FieldError("zero scale in orthogonal basis");
  if (prod < 0)
    for (auto& s : sc) s = -s;  // flip all: the basis stays orthogonal, handedness flips
  Mat3 o = rational_rotation(skew[0], skew[1], skew[2]);
  return {Scalar(sc[0]) * o.rows[0], Scalar(sc[1]) * o.rows[1], Scalar(sc[2]) * o.rows[2]};
}

}  // namespace xsat
