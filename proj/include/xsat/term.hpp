#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "xsat/geometry.hpp"

namespace xsat {

class Term;
using TermPtr = std::shared_ptr<const Term>;

// Cross-product term: a variable, a pre-assigned constant (affine vector or
// projective point), or a cross of two terms. Nodes are immutable and may be
// shared (DAG); evaluation and size measures use tree semantics.
class Term {
 public:
  enum class Kind { Var, AffineConst, ProjConst, Cross };

  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  const Vec3& affine_value() const { return affine_; }
  const ProjPoint& proj_value() const { return proj_; }
  const TermPtr& left() const { return left_; }
  const TermPtr& right() const { return right_; }

  static TermPtr var(const std::string& name);  // validates; "x" is reserved
  static TermPtr affine_const(Vec3 v);
  static TermPtr proj_const(ProjPoint p);
  static TermPtr cross(TermPtr l, TermPtr r);

  static bool valid_identifier(std::string_view name);

 private:
  Term() : proj_(Vec3{1, 0, 0}) {}
  Kind kind_ = Kind::Var;
  std::string name_;
  Vec3 affine_;
  ProjPoint proj_;
  TermPtr left_, right_;
};

// Grammar: term := ident | '[' s ',' s ',' s ']' | '<' s ':' s ':' s '>'
//                | '(' term ' x ' term ')'
TermPtr parse_term(std::string_view text);
TermPtr parse_term_prefix(std::string_view text, size_t& pos);

// Fully parenthesized source; shared nodes are expanded, never serialized.
std::string print_term(const TermPtr& t);

using AffineAssignment = std::map<std::string, Vec3>;
using ProjAssignment = std::map<std::string, ProjPoint>;

// Bottom-up evaluation over F^3. Rejects projective constants and unbound
// variables.
Vec3 eval_affine(const TermPtr& t, const AffineAssignment& a);

// Evaluation over the projective plane; nullopt (undefined) as soon as any
// sub-product has equal arguments. Rejects affine constants.
std::optional<ProjPoint> eval_projective(const TermPtr& t, const ProjAssignment& a);

// Leaf occurrences per variable under tree semantics; equals the homogeneity
// degree in each argument.
std::map<std::string, long long> multidegree(const TermPtr& t);

long long leaf_count(const TermPtr& t);       // tree leaves, constants included
long long tree_node_count(const TermPtr& t);  // 2 * leaves - 1
size_t dag_node_count(const TermPtr& t);      // distinct shared nodes

std::vector<std::string> free_variables(const TermPtr& t);  // sorted, unique
long long constant_leaf_count(const TermPtr& t);            // tree semantics
bool has_affine_constants(const TermPtr& t);
bool has_proj_constants(const TermPtr& t);

// Replaces variable leaves according to the map, preserving sharing.
TermPtr substitute(const TermPtr& t, const std::map<std::string, TermPtr>& repl);

}  // namespace xsat
