#include "xsat/term.hpp"

#include <cctype>
#include <set>
#include <unordered_map>

namespace xsat {

bool Term::valid_identifier(std::string_view name) {
  if (name.empty() || name == "x") return false;
  if (!std::isalpha(static_cast<unsigned char>(name[0]))) return false;
  for (char c : name)
    if (!std::isalnum(static_cast<unsigned char>(c))) return false;
  return true;
}

TermPtr Term::var(const std::string& name) {
  if (!valid_identifier(name))
    throw ParseError(name == "x" ? "'x' is reserved for the cross operator"
                                 : "invalid variable name '" + name + "'",
                     0);
  auto t = std::shared_ptr<Term>(new Term());
  t->kind_ = Kind::Var;
  t->name_ = name;
  return t;
}

TermPtr Term::affine_const(Vec3 v) {
  auto t = std::shared_ptr<Term>(new Term());
  t->kind_ = Kind::AffineConst;
  t->affine_ = std::move(v);
  return t;
}

TermPtr Term::proj_const(ProjPoint p) {
  auto t = std::shared_ptr<Term>(new Term());
  t->kind_ = Kind::ProjConst;
  t->proj_ = std::move(p);
  return t;
}

TermPtr Term::cross(TermPtr l, TermPtr r) {
  if (!l || !r) throw EvalError("null sub-term");
  auto t = std::shared_ptr<Term>(new Term());
  t->kind_ = Kind::Cross;
  t->left_ = std::move(l);
  t->right_ = std::move(r);
  return t;
}

namespace {

void skip_ws(std::string_view s, size_t& pos) {
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
}

std::string parse_ident(std::string_view s, size_t& pos) {
  skip_ws(s, pos);
  size_t start = pos;
  if (pos >= s.size() || !std::isalpha(static_cast<unsigned char>(s[pos])))
    throw ParseError("expected identifier", pos);
  while (pos < s.size() && std::isalnum(static_cast<unsigned char>(s[pos]))) ++pos;
  return std::string(s.substr(start, pos - start));
}

}  // namespace

TermPtr parse_term_prefix(std::string_view s, size_t& pos) {
  skip_ws(s, pos);
  if (pos >= s.size()) throw ParseError("expected term", pos);
  char c = s[pos];
  if (c == '(') {
    ++pos;
    TermPtr l = parse_term_prefix(s, pos);
    size_t oppos = pos;
    std::string op = parse_ident(s, oppos);
    if (op != "x") throw ParseError("expected 'x' operator", pos);
    pos = oppos;
    TermPtr r = parse_term_prefix(s, pos);
    skip_ws(s, pos);
    if (pos >= s.size() || s[pos] != ')') throw ParseError("expected ')'", pos);
    ++pos;
    return Term::cross(std::move(l), std::move(r));
  }
  if (c == '[') return Term::affine_const(Vec3::parse_prefix(s, pos));
  if (c == '<') return Term::proj_const(ProjPoint::parse_prefix(s, pos));
  size_t start = pos;
  std::string name = parse_ident(s, pos);
  if (name == "x") throw ParseError("'x' is reserved for the cross operator", start);
  return Term::var(name);
}

TermPtr parse_term(std::string_view text) {
  size_t pos = 0;
  TermPtr t = parse_term_prefix(text, pos);
  skip_ws(text, pos);
  if (pos != text.size()) throw ParseError("trailing input after term", pos);
  return t;
}

std::string print_term(const TermPtr& t) {
  switch (t->kind()) {
    case Term::Kind::Var:
      return t->name();
    case Term::Kind::AffineConst:
      return t->affine_value().str();
    case Term::Kind::ProjConst:
      return t->proj_value().str();
    case Term::Kind::Cross:
      return "(" + print_term(t->left()) + " x " + print_term(t->right()) + ")";
  }
  throw EvalError("corrupt term");
}

Vec3 eval_affine(const TermPtr& t, const AffineAssignment& a) {
  std::unordered_map<const Term*, Vec3> memo;
  auto go = [&](auto&& self, const TermPtr& n) -> const Vec3& {
    auto it = memo.find(n.get());
    if (it != memo.end()) return it->second;
    Vec3 v;
    switch (n->kind()) {
      case Term::Kind::Var: {
        auto found = a.find(n->name());
        if (found == a.end()) throw EvalError("unbound variable '" + n->name() + "'");
        v = found->second;
        break;
      }
      case Term::Kind::AffineConst:
        v = n->affine_value();
        break;
      case Term::Kind::ProjConst:
        throw EvalError("projective constant in affine evaluation");
      case Term::Kind::Cross:
        v = cross(self(self, n->left()), self(self, n->right()));
        break;
    }
    return memo.emplace(n.get(), std::move(v)).first->second;
  };
  return go(go, t);
}

std::optional<ProjPoint> eval_projective(const TermPtr& t, const ProjAssignment& a) {
  std::unordered_map<const Term*, std::optional<ProjPoint>> memo;
  auto go = [&](auto&& self, const TermPtr& n) -> const std::optional<ProjPoint>& {
    auto it = memo.find(n.get());
    if (it != memo.end()) return it->second;
    std::optional<ProjPoint> v;
    switch (n->kind()) {
      case Term::Kind::Var: {
        auto found = a.find(n->name());
        if (found == a.end()) throw EvalError("unbound variable '" + n->name() + "'");
        v = found->second;
        break;
      }
      case Term::Kind::ProjConst:
        v = n->proj_value();
        break;
      case Term::Kind::AffineConst:
        throw EvalError("affine constant in projective evaluation");
      case Term::Kind::Cross: {
        const auto& l = self(self, n->left());
        if (l) {
          const auto& r = self(self, n->right());
          if (r) v = proj_cross(*l, *r);
        }
        break;
      }
    }
    return memo.emplace(n.get(), std::move(v)).first->second;
  };
  return go(go, t);
}

std::map<std::string, long long> multidegree(const TermPtr& t) {
  std::unordered_map<const Term*, std::map<std::string, long long>> memo;
  auto go = [&](auto&& self,
                const TermPtr& n) -> const std::map<std::string, long long>& {
    auto it = memo.find(n.get());
    if (it != memo.end()) return it->second;
    std::map<std::string, long long> d;
    if (n->kind() == Term::Kind::Var) {
      d[n->name()] = 1;
    } else if (n->kind() == Term::Kind::Cross) {
      d = self(self, n->left());
      for (const auto& [name, deg] : self(self, n->right())) d[name] += deg;
    }
    return memo.emplace(n.get(), std::move(d)).first->second;
  };
  return go(go, t);
}

long long leaf_count(const TermPtr& t) {
  std::unordered_map<const Term*, long long> memo;
  auto go = [&](auto&& self, const TermPtr& n) -> long long {
    auto it = memo.find(n.get());
    if (it != memo.end()) return it->second;
    long long c = n->kind() == Term::Kind::Cross
                      ? self(self, n->left()) + self(self, n->right())
                      : 1;
    memo.emplace(n.get(), c);
    return c;
  };
  return go(go, t);
}

long long tree_node_count(const TermPtr& t) { return 2 * leaf_count(t) - 1; }

size_t dag_node_count(const TermPtr& t) {
  std::set<const Term*> seen;
  auto go = [&](auto&& self, const TermPtr& n) -> void {
    if (!seen.insert(n.get()).second) return;
    if (n->kind() == Term::Kind::Cross) {
      self(self, n->left());
      self(self, n->right());
    }
  };
  go(go, t);
  return seen.size();
}

std::vector<std::string> free_variables(const TermPtr& t) {
  std::vector<std::string> out;
  for (const auto& [name, deg] : multidegree(t)) out.push_back(name);
  return out;
}

long long constant_leaf_count(const TermPtr& t) {
  std::unordered_map<const Term*, long long> memo;
  auto go = [&](auto&& self, const TermPtr& n) -> long long {
    auto it = memo.find(n.get());
    if (it != memo.end()) return it->second;
    long long c = 0;
    if (n->kind() == Term::Kind::Cross)
      c = self(self, n->left()) + self(self, n->right());
    else if (n->kind() != Term::Kind::Var)
      c = 1;
    memo.emplace(n.get(), c);
    return c;
  };
  return go(go, t);
}

namespace {

bool has_kind(const TermPtr& t, Term::Kind k) {
  std::set<const Term*> seen;
  auto go = [&](auto&& self, const TermPtr& n) -> bool {
    if (!seen.insert(n.get()).second) return false;
    if (n->kind() == k) return true;
    if (n->kind() == Term::Kind::Cross)
      return self(self, n->left()) || self(self, n->right());
    return false;
  };
  return go(go, t);
}

}  // namespace

bool has_affine_constants(const TermPtr& t) {
  return has_kind(t, Term::Kind::AffineConst);
}
bool has_proj_constants(const TermPtr& t) { return has_kind(t, Term::Kind::ProjConst); }

TermPtr substitute(const TermPtr& t, const std::map<std::string, TermPtr>& repl) {
  std::unordered_map<const Term*, TermPtr> memo;
  auto go = [&](auto&& self, const TermPtr& n) -> TermPtr {
    auto it = memo.find(n.get());
    if (it != memo.end()) return it->second;
    TermPtr out = n;
    if (n->kind() == Term::Kind::Var) {
      auto found = repl.find(n->name());
      if (found != repl.end()) out = found->second;
    } else if (n->kind() == Term::Kind::Cross) {
      TermPtr l = self(self, n->left());
      TermPtr r = self(self, n->right());
      if (l != n->left() || r != n->right()) out = Term::cross(std::move(l), std::move(r));
    }
    memo.emplace(n.get(), out);
    return out;
  };
  return go(go, t);
}

}  // namespace xsat
