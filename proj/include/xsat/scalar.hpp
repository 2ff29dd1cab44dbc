#pragma once

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "xsat/errors.hpp"

namespace xsat {

// Exact scalar: a rational number, or an element of an iterated real quadratic
// extension Q(sqrt(d1))(sqrt(d2))... Values are immutable.
//
// An extension element is a + b*sqrt(rad) with b != 0; b == 0 always collapses
// to the base element, so is_zero and equality are structural. Rational
// radicands are normalized to squarefree positive integers, which keeps
// independently constructed radicals (sqrt(8) vs 2*sqrt(2)) in one consistent
// representation. Radicands of deeper levels may themselves be tower elements
// (needed for fourth roots); they are adjoined only after the square-root
// solver has verified they are not squares in their base tower.
//
// Text format: "p/q" for rationals, "(a + b * sqrt(D))" for extensions,
// nestable in all three positions.
class Scalar {
 public:
  Scalar() : rat_(0) {}
  Scalar(long v) : rat_(v) {}           // NOLINT: implicit by design
  Scalar(const mpz_class& v) : rat_(v) {}
  Scalar(const mpq_class& v) : rat_(v) { rat_.canonicalize(); }
  static Scalar fraction(const mpz_class& num, const mpz_class& den);

  bool is_rational() const { return ext_ == nullptr; }
  const mpq_class& rational() const;

  // Accessors for a + b*sqrt(rad); only valid when !is_rational().
  const Scalar& base_part() const;
  const Scalar& radical_part() const;
  const Scalar& radicand() const;

  bool is_zero() const { return !ext_ && rat_ == 0; }
  bool is_one() const { return !ext_ && rat_ == 1; }
  bool is_integer() const { return !ext_ && rat_.get_den() == 1; }
  int sign() const;
  int tower_height() const;

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& x, const Scalar& y);
  friend Scalar operator-(const Scalar& x, const Scalar& y);
  friend Scalar operator*(const Scalar& x, const Scalar& y);
  friend Scalar operator/(const Scalar& x, const Scalar& y);
  Scalar& operator+=(const Scalar& y) { return *this = *this + y; }
  Scalar& operator-=(const Scalar& y) { return *this = *this - y; }
  Scalar& operator*=(const Scalar& y) { return *this = *this * y; }

  Scalar inverse() const;  // throws FieldError on zero
  Scalar squared() const { return *this * *this; }
  Scalar pow(unsigned long e) const;

  friend bool operator==(const Scalar& x, const Scalar& y);
  friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }
  friend bool operator<(const Scalar& x, const Scalar& y) { return (x - y).sign() < 0; }

  // Square root within the element's own tower; nullopt when the element is
  // not a square there. Returns the non-negative root.
  static std::optional<Scalar> try_sqrt(const Scalar& x);

  // Exact square root, extending the tower by one level when necessary.
  // Throws FieldError for negative input.
  static Scalar sqrt(const Scalar& x);

  // Exact n-th root without extending the tower; nullopt if none exists.
  static std::optional<Scalar> try_nth_root(const Scalar& x, unsigned long n);

  // The distinct radicands appearing anywhere in the representation.
  std::vector<Scalar> radicands() const;

  std::string str() const;
  static Scalar parse(std::string_view text);                    // full string
  static Scalar parse_prefix(std::string_view text, size_t& pos);

  // a + b*sqrt(rad) with normalization and non-squareness verification.
  static Scalar make_ext(const Scalar& a, const Scalar& b, const Scalar& rad);

 private:
  struct Ext;
  Scalar(mpq_class rat, std::shared_ptr<const Ext> ext);

  mpq_class rat_;                    // value when ext_ == nullptr
  std::shared_ptr<const Ext> ext_;   // a + b*sqrt(rad) otherwise

  friend struct ScalarDetail;
};

}  // namespace xsat
