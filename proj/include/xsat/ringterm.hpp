#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "xsat/scalar.hpp"

namespace xsat {

class RingTerm;
using RingPtr = std::shared_ptr<const RingTerm>;

// Polynomial expression over +, -, * with scalar constants. Subtraction is a
// primitive node, not sugar, since the reduction compiles r - s directly.
class RingTerm {
 public:
  enum class Kind { Var, Const, Add, Sub, Mul };

  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  const Scalar& value() const { return value_; }
  const RingPtr& left() const { return left_; }
  const RingPtr& right() const { return right_; }

  static RingPtr var(const std::string& name);
  static RingPtr constant(Scalar v);
  static RingPtr add(RingPtr l, RingPtr r);
  static RingPtr sub(RingPtr l, RingPtr r);
  static RingPtr mul(RingPtr l, RingPtr r);

 private:
  RingTerm() = default;
  static RingPtr make_binary(Kind k, RingPtr l, RingPtr r);
  Kind kind_ = Kind::Const;
  std::string name_;
  Scalar value_;
  RingPtr left_, right_;
};

// Grammar: expr := term (('+'|'-') term)*; term := factor ('*' factor)*;
// factor := '-' factor | ident | int ['/' int] | '(' expr ')'
RingPtr parse_poly(std::string_view text);
std::string print_poly(const RingPtr& p);

Scalar eval_poly(const RingPtr& p, const std::map<std::string, Scalar>& point);

long long poly_node_count(const RingPtr& p);
std::vector<std::string> poly_variables(const RingPtr& p);  // sorted, unique

// True when every constant leaf is 0, 1 or -1.
bool pm1_constants_only(const RingPtr& p);
// True when every constant leaf is an integer.
bool integer_constants_only(const RingPtr& p);

// Sparse exponent-vector representation with no zero coefficients stored.
struct DensePoly {
  std::vector<std::string> vars;                  // fixed coordinate order
  std::map<std::vector<unsigned>, Scalar> coeff;  // canonical iteration order

  static DensePoly zero(std::vector<std::string> vars);
  static DensePoly constant(std::vector<std::string> vars, const Scalar& c);
  static DensePoly variable(std::vector<std::string> vars, const std::string& name);

  bool is_zero() const { return coeff.empty(); }
  long long total_degree() const;
  DensePoly operator-() const;
  friend DensePoly operator+(const DensePoly& a, const DensePoly& b);
  friend DensePoly operator-(const DensePoly& a, const DensePoly& b);
  friend DensePoly operator*(const DensePoly& a, const DensePoly& b);
  friend bool operator==(const DensePoly& a, const DensePoly& b);

  Scalar eval(const std::map<std::string, Scalar>& point) const;
  std::string str() const;
};

struct SizeLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Distributive-law expansion; exponential in the worst case, so callers must
// keep term sizes at desk scale. Throws SizeLimitError above the node limit.
DensePoly expand_dense(const RingPtr& p, long long node_limit = 24);

enum class ConstantMode { PlusMinusOne, Rational };

// Deterministic generator: `size` counts nodes, leaves are variables or
// mode-dependent constants.
RingPtr random_ring_term(int size, int n_vars, unsigned long seed, ConstantMode mode);

}  // namespace xsat
