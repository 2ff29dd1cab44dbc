#include "xsat/scalar.hpp"

#include <cctype>
#include <tuple>

namespace xsat {

struct Scalar::Ext {
  Scalar a, b, rad;  // value = a + b*sqrt(rad), b != 0, rad > 0 non-square in base
};

namespace {

// Radicands are totally ordered so that mixed-tower operands align on a common
// level order: rational radicands by value (they are squarefree integers, so
// equal value means the same radical), extension radicands above all rational
// ones, ordered among themselves by height and then by value.
bool rad_less(const Scalar& r1, const Scalar& r2) {
  if (r1.is_rational() && r2.is_rational()) return r1.rational() < r2.rational();
  if (r1.is_rational() != r2.is_rational()) return r1.is_rational();
  if (r1.tower_height() != r2.tower_height()) return r1.tower_height() < r2.tower_height();
  return r1 < r2;
}

// -1: x's top extension level sits below y's; 0: same level (or both rational).
int top_level_cmp(const Scalar& x, const Scalar& y) {
  if (x.is_rational() && y.is_rational()) return 0;
  if (x.is_rational()) return -1;
  if (y.is_rational()) return 1;
  const Scalar& rx = x.radicand();
  const Scalar& ry = y.radicand();
  if (rx == ry) return 0;
  return rad_less(rx, ry) ? -1 : 1;
}

// sqrt(q) = k * prod sqrt(f_i): k rational, f_i the primes of odd multiplicity
// in num*den (ascending), possibly followed by one composite leftover whose
// prime factors all exceed the trial-division bound. Prime radicands keep the
// representation canonical across independently constructed radicals.
struct SquarefreeParts {
  mpq_class k;
  std::vector<mpz_class> factors;
};

SquarefreeParts squarefree_parts(const mpq_class& q) {
  mpz_class n = q.get_num() * q.get_den();
  mpz_class s = 1;
  SquarefreeParts out;
  for (mpz_class p = 2; p * p <= n; p = (p == 2 ? mpz_class(3) : mpz_class(p + 2))) {
    if (p > 20000) break;
    unsigned e = 0;
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
      n /= p;
      ++e;
    }
    for (unsigned i = 0; i + 1 < e; i += 2) s *= p;
    if (e % 2) out.factors.push_back(p);
  }
  if (n > 1) {
    if (mpz_perfect_square_p(n.get_mpz_t())) {
      mpz_class r;
      mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
      s *= r;
    } else {
      out.factors.push_back(n);
    }
  }
  out.k = mpq_class(s, q.get_den());
  out.k.canonicalize();
  return out;
}

std::optional<mpq_class> rational_sqrt(const mpq_class& q) {
  if (q < 0) return std::nullopt;
  if (!mpz_perfect_square_p(q.get_num().get_mpz_t())) return std::nullopt;
  if (!mpz_perfect_square_p(q.get_den().get_mpz_t())) return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), q.get_num().get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), q.get_den().get_mpz_t());
  return mpq_class(rn, rd);
}

void collect_radicands(const Scalar& x, std::vector<Scalar>& out) {
  if (x.is_rational()) return;
  collect_radicands(x.base_part(), out);
  collect_radicands(x.radical_part(), out);
  const Scalar& r = x.radicand();
  collect_radicands(r, out);
  for (const Scalar& seen : out)
    if (seen == r) return;
  out.push_back(r);
}

std::vector<Scalar> sorted_chain(std::vector<Scalar> rads) {
  for (size_t i = 1; i < rads.size(); ++i)
    for (size_t j = i; j > 0 && rad_less(rads[j], rads[j - 1]); --j)
      std::swap(rads[j], rads[j - 1]);
  return rads;
}

}  // namespace

struct ScalarDetail {
  static Scalar ext_raw(Scalar a, Scalar b, Scalar rad) {
    if (b.is_zero()) return a;
    return Scalar(0, std::make_shared<const Scalar::Ext>(
                         Scalar::Ext{std::move(a), std::move(b), std::move(rad)}));
  }

  // Square root of c within the tower given by the sorted radicand chain.
  static std::optional<Scalar> sqrt_in(const std::vector<Scalar>& chain, size_t depth,
                                       const Scalar& c) {
    if (c.is_zero()) return Scalar(0);
    if (depth == 0) {
      if (!c.is_rational()) return std::nullopt;
      auto r = rational_sqrt(c.rational());
      if (!r) return std::nullopt;
      return Scalar(*r);
    }
    const Scalar& d = chain[depth - 1];
    Scalar a = c, b = 0;
    if (!c.is_rational() && c.radicand() == d) {
      a = c.base_part();
      b = c.radical_part();
    }
    Scalar radical = ext_raw(0, 1, d);  // sqrt(d) itself
    if (b.is_zero()) {
      if (auto r = sqrt_in(chain, depth - 1, a)) return r;
      if (auto r = sqrt_in(chain, depth - 1, a / d)) return *r * radical;
      return std::nullopt;
    }
    Scalar n = a * a - b * b * d;
    auto m = sqrt_in(chain, depth - 1, n);
    if (!m) return std::nullopt;
    const Scalar half = Scalar::fraction(1, 2);
    for (const Scalar& mm : {*m, -*m}) {
      Scalar u2 = (a + mm) * half;
      if (u2.sign() <= 0) continue;
      auto u = sqrt_in(chain, depth - 1, u2);
      if (!u) continue;
      Scalar v = b / (Scalar(2) * *u);
      Scalar cand = ext_raw(*u, v, d);
      if (cand.sign() < 0) cand = -cand;
      if (cand * cand == c) return cand;
    }
    return std::nullopt;
  }

  static std::optional<Scalar> sqrt_in_own_tower(const Scalar& x) {
    std::vector<Scalar> rads;
    collect_radicands(x, rads);
    auto chain = sorted_chain(std::move(rads));
    auto r = sqrt_in(chain, chain.size(), x);
    if (r && r->sign() < 0) r = -*r;
    return r;
  }
};

Scalar::Scalar(mpq_class rat, std::shared_ptr<const Ext> ext)
    : rat_(std::move(rat)), ext_(std::move(ext)) {}

Scalar Scalar::fraction(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw FieldError("zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(q);
}

const mpq_class& Scalar::rational() const {
  if (ext_) throw FieldError("not a rational");
  return rat_;
}

const Scalar& Scalar::base_part() const {
  if (!ext_) throw FieldError("not an extension element");
  return ext_->a;
}
const Scalar& Scalar::radical_part() const {
  if (!ext_) throw FieldError("not an extension element");
  return ext_->b;
}
const Scalar& Scalar::radicand() const {
  if (!ext_) throw FieldError("not an extension element");
  return ext_->rad;
}

int Scalar::tower_height() const {
  if (!ext_) return 0;
  int h = ext_->a.tower_height();
  h = std::max(h, ext_->b.tower_height());
  h = std::max(h, ext_->rad.tower_height() + 1);
  return std::max(h, 1);
}

Scalar Scalar::operator-() const {
  if (!ext_) return Scalar(mpq_class(-rat_));
  return ScalarDetail::ext_raw(-ext_->a, -ext_->b, ext_->rad);
}

Scalar operator+(const Scalar& x, const Scalar& y) {
  int c = top_level_cmp(x, y);
  if (c == 0) {
    if (x.is_rational()) return Scalar(mpq_class(x.rat_ + y.rat_));
    return ScalarDetail::ext_raw(x.ext_->a + y.ext_->a, x.ext_->b + y.ext_->b, x.ext_->rad);
  }
  if (c < 0)  // x lives below y's top level
    return ScalarDetail::ext_raw(x + y.ext_->a, y.ext_->b, y.ext_->rad);
  return ScalarDetail::ext_raw(x.ext_->a + y, x.ext_->b, x.ext_->rad);
}

Scalar operator-(const Scalar& x, const Scalar& y) { return x + (-y); }

Scalar operator*(const Scalar& x, const Scalar& y) {
  if (x.is_zero() || y.is_zero()) return Scalar(0);
  int c = top_level_cmp(x, y);
  if (c == 0) {
    if (x.is_rational()) return Scalar(mpq_class(x.rat_ * y.rat_));
    const Scalar& d = x.ext_->rad;
    Scalar a = x.ext_->a * y.ext_->a + x.ext_->b * y.ext_->b * d;
    Scalar b = x.ext_->a * y.ext_->b + x.ext_->b * y.ext_->a;
    return ScalarDetail::ext_raw(std::move(a), std::move(b), d);
  }
  if (c < 0) return ScalarDetail::ext_raw(x * y.ext_->a, x * y.ext_->b, y.ext_->rad);
  return ScalarDetail::ext_raw(x.ext_->a * y, x.ext_->b * y, x.ext_->rad);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw FieldError("division by zero");
  if (!ext_) {
    mpq_class r;
    mpq_inv(r.get_mpq_t(), rat_.get_mpq_t());
    return Scalar(r);
  }
  // 1/(a+b*sqrt(d)) = (a-b*sqrt(d)) / (a^2 - b^2 d); the norm is nonzero in a
  // genuine tower since b != 0.
  Scalar n = ext_->a * ext_->a - ext_->b * ext_->b * ext_->rad;
  if (n.is_zero()) throw FieldError("degenerate extension tower");
  Scalar ninv = n.inverse();
  return ScalarDetail::ext_raw(ext_->a * ninv, -(ext_->b * ninv), ext_->rad);
}

Scalar operator/(const Scalar& x, const Scalar& y) { return x * y.inverse(); }

Scalar Scalar::pow(unsigned long e) const {
  Scalar result(1), base(*this);
  while (e) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

int Scalar::sign() const {
  if (!ext_) return sgn(rat_);
  int sa = ext_->a.sign();
  int sb = ext_->b.sign();
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Signs differ: compare |a| against |b|*sqrt(d) via the norm.
  Scalar n = ext_->a * ext_->a - ext_->b * ext_->b * ext_->rad;
  int t = n.sign();
  if (t == 0) throw FieldError("degenerate extension tower");
  return t > 0 ? sa : sb;
}

bool operator==(const Scalar& x, const Scalar& y) {
  if (!x.ext_ && !y.ext_) return x.rat_ == y.rat_;
  return (x - y).is_zero();
}

std::optional<Scalar> Scalar::try_sqrt(const Scalar& x) {
  if (x.sign() < 0) return std::nullopt;
  return ScalarDetail::sqrt_in_own_tower(x);
}

namespace {

// sqrt(radN) as an element, reusing radicals already present in `context`
// when the solver finds the root there.
Scalar radical_element(const Scalar& radN, const std::vector<Scalar>& context) {
  std::vector<Scalar> rads;
  for (const auto& c : context) collect_radicands(c, rads);
  collect_radicands(radN, rads);
  auto chain = sorted_chain(std::move(rads));
  if (auto s = ScalarDetail::sqrt_in(chain, chain.size(), radN)) {
    if (s->sign() < 0) *s = -*s;
    return *s;
  }
  return ScalarDetail::ext_raw(Scalar(0), Scalar(1), radN);
}

}  // namespace

Scalar Scalar::make_ext(const Scalar& a, const Scalar& b, const Scalar& rad) {
  if (b.is_zero()) return a;
  if (rad.sign() <= 0) throw FieldError("radicand must be positive");
  if (rad.is_rational()) {
    auto parts = squarefree_parts(rad.rational());
    Scalar acc = Scalar(parts.k);
    for (const auto& f : parts.factors)
      acc = acc * radical_element(Scalar(f), {a, b, acc});
    // Composing through the operators keeps extension levels nested in
    // radicand order even when a or b come from a higher tower.
    return a + b * acc;
  }
  return a + b * radical_element(rad, {a, b});
}

Scalar Scalar::sqrt(const Scalar& x) {
  if (x.sign() < 0) throw FieldError("square root of a negative value");
  if (x.is_zero()) return Scalar(0);
  if (auto r = ScalarDetail::sqrt_in_own_tower(x)) return *r;
  return make_ext(Scalar(0), Scalar(1), x);
}

std::optional<Scalar> Scalar::try_nth_root(const Scalar& x, unsigned long n) {
  if (n == 0) throw FieldError("zeroth root");
  if (n == 1) return x;
  if (n % 2 == 0) {
    auto h = try_sqrt(x);
    if (!h) return std::nullopt;
    return try_nth_root(*h, n / 2);
  }
  if (!x.is_rational()) return std::nullopt;
  const mpq_class& q = x.rational();
  mpz_class num = q.get_num(), den = q.get_den(), rn, rd;
  int negative = num < 0;
  if (negative) num = -num;
  if (!mpz_root(rn.get_mpz_t(), num.get_mpz_t(), n)) return std::nullopt;
  if (!mpz_root(rd.get_mpz_t(), den.get_mpz_t(), n)) return std::nullopt;
  if (negative) rn = -rn;
  return Scalar(mpq_class(rn, rd));
}

std::vector<Scalar> Scalar::radicands() const {
  std::vector<Scalar> out;
  collect_radicands(*this, out);
  return out;
}

std::string Scalar::str() const {
  if (!ext_) return rat_.get_str();
  return "(" + ext_->a.str() + " + " + ext_->b.str() + " * sqrt(" + ext_->rad.str() + "))";
}

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

mpz_class parse_digits(std::string_view s, size_t& pos) {
  size_t start = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  if (pos == start) throw ParseError("expected digits", pos);
  return mpz_class(std::string(s.substr(start, pos - start)), 10);
}

Scalar parse_rational(std::string_view s, size_t& pos) {
  skip_ws(s, pos);
  bool neg = false;
  if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
    neg = s[pos] == '-';
    ++pos;
  }
  mpz_class num = parse_digits(s, pos);
  mpz_class den = 1;
  if (pos < s.size() && s[pos] == '/') {
    ++pos;
    den = parse_digits(s, pos);
    if (den == 0) throw ParseError("zero denominator", pos);
  }
  if (neg) num = -num;
  return Scalar::fraction(num, den);
}

}  // namespace

Scalar Scalar::parse_prefix(std::string_view s, size_t& pos) {
  skip_ws(s, pos);
  if (pos >= s.size()) throw ParseError("expected scalar", pos);
  if (s[pos] != '(') return parse_rational(s, pos);
  size_t open = pos;
  ++pos;
  Scalar a = parse_prefix(s, pos);
  expect(s, pos, '+');
  Scalar b = parse_prefix(s, pos);
  expect(s, pos, '*');
  skip_ws(s, pos);
  if (s.substr(pos, 4) != "sqrt") throw ParseError("expected 'sqrt'", pos);
  pos += 4;
  expect(s, pos, '(');
  Scalar rad = parse_prefix(s, pos);
  expect(s, pos, ')');
  expect(s, pos, ')');
  try {
    return make_ext(a, b, rad);
  } catch (const FieldError& e) {
    throw ParseError(e.what(), open);
  }
}

Scalar Scalar::parse(std::string_view text) {
  size_t pos = 0;
  Scalar r = parse_prefix(text, pos);
  skip_ws(text, pos);
  if (pos != text.size()) throw ParseError("trailing input after scalar", pos);
  return r;
}

}  // namespace xsat
