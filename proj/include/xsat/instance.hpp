#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "xsat/term.hpp"
#include "xsat/vonstaudt.hpp"

#include "json.hpp"

namespace xsat {

enum class ProblemKind { XNontriv, XUvec, XNonequiv, XSat };
enum class EvalMode { Affine, Projective };

std::string to_string(ProblemKind k);
std::string to_string(EvalMode m);
ProblemKind problem_kind_from_string(const std::string& s);
EvalMode eval_mode_from_string(const std::string& s);

// Metadata a compiled instance carries so that searches and witness decoding
// can work in root space.
struct CompiledMeta {
  std::string poly_text;
  std::vector<std::string> poly_vars;
  bool constant_free = false;
  std::array<std::string, 3> frame_vars{};   // names of A, B, C (constant-free)
  std::optional<std::array<Vec3, 3>> frame_basis;  // with-constants frames
};

// One instance of the decision problems: XNONTRIV and XUVEC take one term,
// XNONEQUIV two, XSAT one term plus a right-hand side (a designated variable,
// or a projective constant for compiled equations).
struct Instance {
  ProblemKind kind = ProblemKind::XNontriv;
  EvalMode mode = EvalMode::Affine;
  bool constants_allowed = true;
  std::vector<TermPtr> terms;
  std::string designated;  // XSAT: variable name; empty when rhs is a constant
  TermPtr rhs;             // XSAT: Var or ProjConst
  std::optional<CompiledMeta> compiled;

  std::vector<std::string> variables() const;  // sorted union over all terms
  void validate() const;                       // arity / constants / designated
};

struct Witness {
  EvalMode mode = EvalMode::Affine;
  std::map<std::string, ProjPoint> proj;
  std::map<std::string, Vec3> affine;
  std::map<std::string, Scalar> roots;  // optional decoded roots
};

struct Verdict {
  bool accepted = false;
  std::string reason;  // empty on Accept
};

nlohmann::json instance_to_json(const Instance& inst);
Instance instance_from_json(const nlohmann::json& j);
nlohmann::json witness_to_json(const Witness& w);
Witness witness_from_json(const nlohmann::json& j);

}  // namespace xsat
