#include "xsat/instance.hpp"

#include <set>

namespace xsat {

std::string to_string(ProblemKind k) {
  switch (k) {
    case ProblemKind::XNontriv:
      return "XNONTRIV";
    case ProblemKind::XUvec:
      return "XUVEC";
    case ProblemKind::XNonequiv:
      return "XNONEQUIV";
    case ProblemKind::XSat:
      return "XSAT";
  }
  throw EvalError("corrupt problem kind");
}

std::string to_string(EvalMode m) {
  return m == EvalMode::Affine ? "affine" : "projective";
}

ProblemKind problem_kind_from_string(const std::string& s) {
  if (s == "XNONTRIV") return ProblemKind::XNontriv;
  if (s == "XUVEC") return ProblemKind::XUvec;
  if (s == "XNONEQUIV") return ProblemKind::XNonequiv;
  if (s == "XSAT") return ProblemKind::XSat;
  throw ParseError("unknown problem kind '" + s + "'", 0);
}

EvalMode eval_mode_from_string(const std::string& s) {
  if (s == "affine") return EvalMode::Affine;
  if (s == "projective") return EvalMode::Projective;
  throw ParseError("unknown mode '" + s + "'", 0);
}

std::vector<std::string> Instance::variables() const {
  std::set<std::string> vars;
  for (const auto& t : terms)
    for (auto& v : free_variables(t)) vars.insert(v);
  if (rhs && rhs->kind() == Term::Kind::Var) vars.insert(rhs->name());
  return {vars.begin(), vars.end()};
}

void Instance::validate() const {
  size_t want = kind == ProblemKind::XNonequiv ? 2 : 1;
  if (terms.size() != want)
    throw ReductionError("instance arity mismatch for " + to_string(kind));
  if (kind == ProblemKind::XSat) {
    if (!rhs) throw ReductionError("XSAT instance without right-hand side");
    if (rhs->kind() == Term::Kind::Var) {
      if (designated != rhs->name())
        throw ReductionError("designated variable disagrees with rhs");
      auto vars = free_variables(terms[0]);
      bool found = false;
      for (auto& v : vars) found = found || v == designated;
      if (!found && mode == EvalMode::Affine)
        throw ReductionError("designated variable does not occur in the term");
    } else if (rhs->kind() != Term::Kind::ProjConst) {
      throw ReductionError("XSAT rhs must be a variable or projective constant");
    }
  }
  if (!constants_allowed)
    for (const auto& t : terms)
      if (constant_leaf_count(t) != 0)
        throw ReductionError("constant leaves in a constant-free instance");
}

nlohmann::json instance_to_json(const Instance& inst) {
  nlohmann::json j;
  j["kind"] = to_string(inst.kind);
  j["mode"] = to_string(inst.mode);
  j["constants"] = inst.constants_allowed ? "allowed" : "forbidden";
  j["terms"] = nlohmann::json::array();
  for (const auto& t : inst.terms) j["terms"].push_back(print_term(t));
  j["vars"] = inst.variables();
  if (inst.kind == ProblemKind::XSat) {
    j["lhs"] = print_term(inst.terms[0]);
    j["rhs"] = print_term(inst.rhs);
    if (!inst.designated.empty()) j["designated"] = inst.designated;
  }
  if (inst.compiled) {
    nlohmann::json c;
    c["poly"] = inst.compiled->poly_text;
    c["poly_vars"] = inst.compiled->poly_vars;
    c["constant_free"] = inst.compiled->constant_free;
    if (inst.compiled->constant_free) {
      c["frame_vars"] = inst.compiled->frame_vars;
    } else if (inst.compiled->frame_basis) {
      c["frame_basis"] = nlohmann::json::array();
      for (const auto& v : *inst.compiled->frame_basis)
        c["frame_basis"].push_back(v.str());
    }
    j["compiled"] = c;
  }
  return j;
}

Instance instance_from_json(const nlohmann::json& j) {
  Instance inst;
  inst.kind = problem_kind_from_string(j.at("kind").get<std::string>());
  inst.mode = eval_mode_from_string(j.at("mode").get<std::string>());
  inst.constants_allowed = j.value("constants", "allowed") == "allowed";
  for (const auto& t : j.at("terms")) inst.terms.push_back(parse_term(t.get<std::string>()));
  if (inst.kind == ProblemKind::XSat) {
    inst.rhs = parse_term(j.at("rhs").get<std::string>());
    if (inst.rhs->kind() == Term::Kind::Var)
      inst.designated = inst.rhs->name();
    else if (j.contains("designated"))
      inst.designated = j["designated"].get<std::string>();
  }
  if (j.contains("compiled")) {
    const auto& c = j["compiled"];
    CompiledMeta meta;
    meta.poly_text = c.at("poly").get<std::string>();
    meta.poly_vars = c.at("poly_vars").get<std::vector<std::string>>();
    meta.constant_free = c.at("constant_free").get<bool>();
    if (c.contains("frame_vars")) {
      auto fv = c["frame_vars"].get<std::vector<std::string>>();
      if (fv.size() != 3) throw ParseError("frame_vars must have three entries", 0);
      meta.frame_vars = {fv[0], fv[1], fv[2]};
    }
    if (c.contains("frame_basis")) {
      auto fb = c["frame_basis"].get<std::vector<std::string>>();
      if (fb.size() != 3) throw ParseError("frame_basis must have three entries", 0);
      meta.frame_basis = {Vec3::parse(fb[0]), Vec3::parse(fb[1]), Vec3::parse(fb[2])};
    }
    inst.compiled = std::move(meta);
  }
  inst.validate();
  return inst;
}

nlohmann::json witness_to_json(const Witness& w) {
  nlohmann::json j;
  j["mode"] = to_string(w.mode);
  nlohmann::json assign = nlohmann::json::object();
  if (w.mode == EvalMode::Projective)
    for (const auto& [name, p] : w.proj) assign[name] = p.str();
  else
    for (const auto& [name, v] : w.affine) assign[name] = v.str();
  j["assignment"] = assign;
  if (!w.roots.empty()) {
    nlohmann::json roots = nlohmann::json::object();
    for (const auto& [name, r] : w.roots) roots[name] = r.str();
    j["roots"] = roots;
  }
  return j;
}

Witness witness_from_json(const nlohmann::json& j) {
  Witness w;
  if (j.contains("mode")) {
    w.mode = eval_mode_from_string(j.at("mode").get<std::string>());
  } else {
    // infer from the first assignment literal: points use <...>, vectors [...]
    for (const auto& [name, text] : j.at("assignment").items()) {
      (void)name;
      std::string s = text.get<std::string>();
      w.mode = (!s.empty() && s[0] == '<') ? EvalMode::Projective : EvalMode::Affine;
      break;
    }
  }
  for (const auto& [name, text] : j.at("assignment").items()) {
    if (w.mode == EvalMode::Projective)
      w.proj.emplace(name, ProjPoint::parse(text.get<std::string>()));
    else
      w.affine.emplace(name, Vec3::parse(text.get<std::string>()));
  }
  if (j.contains("roots"))
    for (const auto& [name, text] : j["roots"].items())
      w.roots.emplace(name, Scalar::parse(text.get<std::string>()));
  return w;
}

}  // namespace xsat
