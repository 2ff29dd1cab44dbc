#include "xsat/ringterm.hpp"

#include <cctype>
#include <random>
#include <set>
#include <unordered_map>

namespace xsat {

RingPtr RingTerm::var(const std::string& name) {
  auto p = std::shared_ptr<RingTerm>(new RingTerm());
  p->kind_ = Kind::Var;
  p->name_ = name;
  return p;
}

RingPtr RingTerm::constant(Scalar v) {
  auto p = std::shared_ptr<RingTerm>(new RingTerm());
  p->kind_ = Kind::Const;
  p->value_ = std::move(v);
  return p;
}

RingPtr RingTerm::make_binary(Kind k, RingPtr l, RingPtr r) {
  if (!l || !r) throw EvalError("null ring sub-term");
  auto p = std::shared_ptr<RingTerm>(new RingTerm());
  p->kind_ = k;
  p->left_ = std::move(l);
  p->right_ = std::move(r);
  return p;
}

RingPtr RingTerm::add(RingPtr l, RingPtr r) {
  return make_binary(Kind::Add, std::move(l), std::move(r));
}
RingPtr RingTerm::sub(RingPtr l, RingPtr r) {
  return make_binary(Kind::Sub, std::move(l), std::move(r));
}
RingPtr RingTerm::mul(RingPtr l, RingPtr r) {
  return make_binary(Kind::Mul, std::move(l), std::move(r));
}

namespace {

void skip_ws(std::string_view s, size_t& pos) {
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
}

mpz_class parse_digits(std::string_view s, size_t& pos) {
  size_t start = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  if (pos == start) throw ParseError("expected digits", pos);
  return mpz_class(std::string(s.substr(start, pos - start)), 10);
}

RingPtr parse_expr(std::string_view s, size_t& pos);

RingPtr parse_factor(std::string_view s, size_t& pos) {
  skip_ws(s, pos);
  if (pos >= s.size()) throw ParseError("expected factor", pos);
  char c = s[pos];
  if (c == '-') {
    ++pos;
    RingPtr f = parse_factor(s, pos);
    if (f->kind() == RingTerm::Kind::Const) return RingTerm::constant(-f->value());
    return RingTerm::sub(RingTerm::constant(Scalar(0)), std::move(f));
  }
  if (c == '(') {
    ++pos;
    RingPtr e = parse_expr(s, pos);
    skip_ws(s, pos);
    if (pos >= s.size() || s[pos] != ')') throw ParseError("expected ')'", pos);
    ++pos;
    return e;
  }
  if (std::isdigit(static_cast<unsigned char>(c))) {
    mpz_class num = parse_digits(s, pos);
    mpz_class den = 1;
    if (pos < s.size() && s[pos] == '/') {
      ++pos;
      den = parse_digits(s, pos);
      if (den == 0) throw ParseError("zero denominator", pos);
    }
    return RingTerm::constant(Scalar::fraction(num, den));
  }
  if (std::isalpha(static_cast<unsigned char>(c))) {
    size_t start = pos;
    while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    return RingTerm::var(std::string(s.substr(start, pos - start)));
  }
  throw ParseError("unexpected character in polynomial", pos);
}

RingPtr parse_product(std::string_view s, size_t& pos) {
  RingPtr p = parse_factor(s, pos);
  for (;;) {
    skip_ws(s, pos);
    if (pos < s.size() && s[pos] == '*') {
      ++pos;
      p = RingTerm::mul(std::move(p), parse_factor(s, pos));
    } else {
      return p;
    }
  }
}

RingPtr parse_expr(std::string_view s, size_t& pos) {
  RingPtr p = parse_product(s, pos);
  for (;;) {
    skip_ws(s, pos);
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
      char op = s[pos];
      ++pos;
      RingPtr r = parse_product(s, pos);
      p = op == '+' ? RingTerm::add(std::move(p), std::move(r))
                    : RingTerm::sub(std::move(p), std::move(r));
    } else {
      return p;
    }
  }
}

int precedence(RingTerm::Kind k) {
  switch (k) {
    case RingTerm::Kind::Add:
    case RingTerm::Kind::Sub:
      return 1;
    case RingTerm::Kind::Mul:
      return 2;
    default:
      return 3;
  }
}

void print_rec(const RingPtr& p, int parent_prec, bool right_child, std::string& out) {
  int prec = precedence(p->kind());
  switch (p->kind()) {
    case RingTerm::Kind::Var:
      out += p->name();
      return;
    case RingTerm::Kind::Const: {
      std::string text = p->value().str();
      bool needs_parens = text[0] == '-' && parent_prec > 0 && right_child;
      if (needs_parens) out += '(';
      out += text;
      if (needs_parens) out += ')';
      return;
    }
    default:
      break;
  }
  // Parenthesize when binding looser than the parent, or as a right operand of
  // an equal-precedence operator (both + - * associate to the left here).
  bool parens = prec < parent_prec || (prec == parent_prec && right_child);
  if (parens) out += '(';
  const char* op = p->kind() == RingTerm::Kind::Add   ? " + "
                   : p->kind() == RingTerm::Kind::Sub ? " - "
                                                      : " * ";
  print_rec(p->left(), prec, false, out);
  out += op;
  print_rec(p->right(), prec, true, out);
  if (parens) out += ')';
}

}  // namespace

RingPtr parse_poly(std::string_view text) {
  size_t pos = 0;
  RingPtr p = parse_expr(text, pos);
  skip_ws(text, pos);
  if (pos != text.size()) throw ParseError("trailing input after polynomial", pos);
  return p;
}

std::string print_poly(const RingPtr& p) {
  std::string out;
  print_rec(p, 0, false, out);
  return out;
}

Scalar eval_poly(const RingPtr& p, const std::map<std::string, Scalar>& point) {
  std::unordered_map<const RingTerm*, Scalar> memo;
  auto go = [&](auto&& self, const RingPtr& n) -> const Scalar& {
    auto it = memo.find(n.get());
    if (it != memo.end()) return it->second;
    Scalar v;
    switch (n->kind()) {
      case RingTerm::Kind::Var: {
        auto found = point.find(n->name());
        if (found == point.end()) throw EvalError("unbound variable '" + n->name() + "'");
        v = found->second;
        break;
      }
      case RingTerm::Kind::Const:
        v = n->value();
        break;
      case RingTerm::Kind::Add:
        v = self(self, n->left()) + self(self, n->right());
        break;
      case RingTerm::Kind::Sub:
        v = self(self, n->left()) - self(self, n->right());
        break;
      case RingTerm::Kind::Mul:
        v = self(self, n->left()) * self(self, n->right());
        break;
    }
    return memo.emplace(n.get(), std::move(v)).first->second;
  };
  return go(go, p);
}

long long poly_node_count(const RingPtr& p) {
  switch (p->kind()) {
    case RingTerm::Kind::Var:
    case RingTerm::Kind::Const:
      return 1;
    default:
      return 1 + poly_node_count(p->left()) + poly_node_count(p->right());
  }
}

namespace {

void collect_vars(const RingPtr& p, std::set<std::string>& out) {
  switch (p->kind()) {
    case RingTerm::Kind::Var:
      out.insert(p->name());
      return;
    case RingTerm::Kind::Const:
      return;
    default:
      collect_vars(p->left(), out);
      collect_vars(p->right(), out);
  }
}

template <typename Pred>
bool all_constants(const RingPtr& p, Pred pred) {
  switch (p->kind()) {
    case RingTerm::Kind::Var:
      return true;
    case RingTerm::Kind::Const:
      return pred(p->value());
    default:
      return all_constants(p->left(), pred) && all_constants(p->right(), pred);
  }
}

}  // namespace

std::vector<std::string> poly_variables(const RingPtr& p) {
  std::set<std::string> vars;
  collect_vars(p, vars);
  return {vars.begin(), vars.end()};
}

bool pm1_constants_only(const RingPtr& p) {
  return all_constants(p, [](const Scalar& v) {
    return v.is_zero() || v.is_one() || v == Scalar(-1);
  });
}

bool integer_constants_only(const RingPtr& p) {
  return all_constants(p, [](const Scalar& v) { return v.is_integer(); });
}

DensePoly DensePoly::zero(std::vector<std::string> vars) {
  return DensePoly{std::move(vars), {}};
}

DensePoly DensePoly::constant(std::vector<std::string> vars, const Scalar& c) {
  DensePoly p = zero(std::move(vars));
  if (!c.is_zero()) p.coeff[std::vector<unsigned>(p.vars.size(), 0)] = c;
  return p;
}

DensePoly DensePoly::variable(std::vector<std::string> vars, const std::string& name) {
  DensePoly p = zero(std::move(vars));
  std::vector<unsigned> e(p.vars.size(), 0);
  for (size_t i = 0;; ++i) {
    if (i == p.vars.size()) throw EvalError("variable '" + name + "' not in coordinate list");
    if (p.vars[i] == name) {
      e[i] = 1;
      break;
    }
  }
  p.coeff[std::move(e)] = Scalar(1);
  return p;
}

long long DensePoly::total_degree() const {
  long long d = 0;
  for (const auto& [e, c] : coeff) {
    long long t = 0;
    for (unsigned k : e) t += k;
    d = std::max(d, t);
  }
  return d;
}

DensePoly DensePoly::operator-() const {
  DensePoly r = *this;
  for (auto& [e, c] : r.coeff) c = -c;
  return r;
}

DensePoly operator+(const DensePoly& a, const DensePoly& b) {
  DensePoly r = a;
  for (const auto& [e, c] : b.coeff) {
    auto it = r.coeff.find(e);
    if (it == r.coeff.end()) {
      r.coeff.emplace(e, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) r.coeff.erase(it);
    }
  }
  return r;
}

DensePoly operator-(const DensePoly& a, const DensePoly& b) { return a + (-b); }

DensePoly operator*(const DensePoly& a, const DensePoly& b) {
  DensePoly r = DensePoly::zero(a.vars);
  for (const auto& [ea, ca] : a.coeff)
    for (const auto& [eb, cb] : b.coeff) {
      std::vector<unsigned> e(ea.size());
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      Scalar c = ca * cb;
      auto it = r.coeff.find(e);
      if (it == r.coeff.end()) {
        r.coeff.emplace(std::move(e), std::move(c));
      } else {
        it->second += c;
        if (it->second.is_zero()) r.coeff.erase(it);
      }
    }
  return r;
}

bool operator==(const DensePoly& a, const DensePoly& b) { return (a - b).is_zero(); }

Scalar DensePoly::eval(const std::map<std::string, Scalar>& point) const {
  Scalar total(0);
  for (const auto& [e, c] : coeff) {
    Scalar term = c;
    for (size_t i = 0; i < vars.size(); ++i) {
      if (!e[i]) continue;
      auto found = point.find(vars[i]);
      if (found == point.end()) throw EvalError("unbound variable '" + vars[i] + "'");
      term = term * found->second.pow(e[i]);
    }
    total = total + term;
  }
  return total;
}

std::string DensePoly::str() const {
  if (coeff.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : coeff) {
    if (!out.empty()) out += " + ";
    out += c.str();
    for (size_t i = 0; i < vars.size(); ++i) {
      if (!e[i]) continue;
      out += "*" + vars[i];
      if (e[i] > 1) out += "^" + std::to_string(e[i]);
    }
  }
  return out;
}

DensePoly expand_dense(const RingPtr& p, long long node_limit) {
  if (poly_node_count(p) > node_limit)
    throw SizeLimitError("ring term exceeds dense-expansion node limit");
  std::vector<std::string> vars = poly_variables(p);
  auto go = [&](auto&& self, const RingPtr& n) -> DensePoly {
    switch (n->kind()) {
      case RingTerm::Kind::Var:
        return DensePoly::variable(vars, n->name());
      case RingTerm::Kind::Const:
        return DensePoly::constant(vars, n->value());
      case RingTerm::Kind::Add:
        return self(self, n->left()) + self(self, n->right());
      case RingTerm::Kind::Sub:
        return self(self, n->left()) - self(self, n->right());
      case RingTerm::Kind::Mul:
        return self(self, n->left()) * self(self, n->right());
    }
    throw EvalError("corrupt ring term");
  };
  return go(go, p);
}

RingPtr random_ring_term(int size, int n_vars, unsigned long seed, ConstantMode mode) {
  if (size < 1) throw EvalError("ring term size must be at least 1");
  if (n_vars < 1) throw EvalError("need at least one variable");
  std::mt19937_64 rng(seed);
  auto gen = [&](auto&& self, int n) -> RingPtr {
    if (n <= 2) {  // a binary node needs two children, so 2 rounds down to a leaf
      if (rng() % 4 != 0) {
        return RingTerm::var("X" + std::to_string(1 + rng() % n_vars));
      }
      if (mode == ConstantMode::PlusMinusOne) {
        long choices[3] = {0, 1, -1};
        return RingTerm::constant(Scalar(choices[rng() % 3]));
      }
      long num = static_cast<long>(rng() % 19) - 9;
      long den = 1 + static_cast<long>(rng() % 9);
      return RingTerm::constant(Scalar::fraction(num, den));
    }
    int left = n >= 3 ? 1 + static_cast<int>(rng() % (n - 2)) : 1;
    RingPtr l = self(self, left);
    RingPtr r = self(self, n - 1 - left);
    switch (rng() % 3) {
      case 0:
        return RingTerm::add(std::move(l), std::move(r));
      case 1:
        return RingTerm::sub(std::move(l), std::move(r));
      default:
        return RingTerm::mul(std::move(l), std::move(r));
    }
  };
  return gen(gen, size);
}

}  // namespace xsat
