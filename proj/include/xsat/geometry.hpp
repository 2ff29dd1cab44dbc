#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "xsat/scalar.hpp"

namespace xsat {

// Exact 3-vector over a Scalar field. Text format "[x, y, z]".
struct Vec3 {
  Scalar x, y, z;

  Vec3() = default;
  Vec3(Scalar x_, Scalar y_, Scalar z_)
      : x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}

  bool is_zero() const { return x.is_zero() && y.is_zero() && z.is_zero(); }
  friend Vec3 operator+(const Vec3& v, const Vec3& w) {
    return {v.x + w.x, v.y + w.y, v.z + w.z};
  }
  friend Vec3 operator-(const Vec3& v, const Vec3& w) {
    return {v.x - w.x, v.y - w.y, v.z - w.z};
  }
  Vec3 operator-() const { return {-x, -y, -z}; }
  friend Vec3 operator*(const Scalar& s, const Vec3& v) {
    return {s * v.x, s * v.y, s * v.z};
  }
  friend bool operator==(const Vec3& v, const Vec3& w) {
    return v.x == w.x && v.y == w.y && v.z == w.z;
  }
  friend bool operator!=(const Vec3& v, const Vec3& w) { return !(v == w); }

  std::string str() const;
  static Vec3 parse(std::string_view text);
  static Vec3 parse_prefix(std::string_view text, size_t& pos);
};

Scalar dot(const Vec3& v, const Vec3& w);
Vec3 cross(const Vec3& v, const Vec3& w);

// Projective point: a nonzero vector modulo scaling. The stored representative
// is canonical (first nonzero coordinate 1), so equality is component-wise.
// Text format "<x : y : z>".
class ProjPoint {
 public:
  explicit ProjPoint(const Vec3& rep);  // throws FieldError on the zero vector
  const Vec3& rep() const { return rep_; }
  friend bool operator==(const ProjPoint& p, const ProjPoint& q) {
    return p.rep_ == q.rep_;
  }
  friend bool operator!=(const ProjPoint& p, const ProjPoint& q) { return !(p == q); }

  std::string str() const;
  static ProjPoint parse(std::string_view text);
  static ProjPoint parse_prefix(std::string_view text, size_t& pos);

 private:
  Vec3 rep_;
};

// F(v x w) for distinct points; nullopt (undefined) when the points coincide.
std::optional<ProjPoint> proj_cross(const ProjPoint& p, const ProjPoint& q);

struct Mat3 {
  std::array<Vec3, 3> rows;

  static Mat3 identity();
  Mat3 transpose() const;
  Scalar det() const;
  friend Mat3 operator*(const Mat3& a, const Mat3& b);
  friend Vec3 operator*(const Mat3& a, const Vec3& v);
  friend bool operator==(const Mat3& a, const Mat3& b) { return a.rows == b.rows; }
};

// Rational special-orthogonal matrix via the Cayley transform of the skew
// matrix built from (p, q, r): O = (I - S)(I + S)^-1 with O O^T = I, det O = 1.
Mat3 rational_rotation(const mpq_class& p, const mpq_class& q, const mpq_class& r);

// Rows of rational_rotation(skew) scaled componentwise; the scales' signs are
// flipped together if needed so the result is right-handed. Zero scales are
// rejected.
std::array<Vec3, 3> orthogonal_basis(const std::array<mpq_class, 3>& skew,
                                     const std::array<mpq_class, 3>& scales);

}  // namespace xsat
