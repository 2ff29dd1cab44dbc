#include "xsat/problems.hpp"

#include "xsat/compile.hpp"

namespace xsat {

namespace {

const Vec3 kE3{0, 0, 1};

Verdict reject(std::string reason) { return Verdict{false, std::move(reason)}; }

Verdict verify_affine(const Instance& inst, const Witness& w) {
  Vec3 value = eval_affine(inst.terms[0], w.affine);
  switch (inst.kind) {
    case ProblemKind::XNontriv:
      if (value.is_zero()) return reject("value is the zero vector");
      return {true, ""};
    case ProblemKind::XUvec:
      if (!(value == kE3)) return reject("value is not e3");
      return {true, ""};
    case ProblemKind::XSat: {
      auto it = w.affine.find(inst.designated);
      if (it == w.affine.end())
        return reject("designated variable '" + inst.designated + "' unassigned");
      if (it->second.is_zero()) return reject("zero designated variable");
      if (!(value == it->second)) return reject("value differs from the designated variable");
      return {true, ""};
    }
    case ProblemKind::XNonequiv:
      return reject("XNONEQUIV is a projective problem");
  }
  return reject("corrupt instance");
}

Verdict verify_projective(const Instance& inst, const Witness& w) {
  switch (inst.kind) {
    case ProblemKind::XNontriv: {
      auto value = eval_projective(inst.terms[0], w.proj);
      if (!value) return reject("undefined sub-term");
      return {true, ""};
    }
    case ProblemKind::XNonequiv: {
      auto a = eval_projective(inst.terms[0], w.proj);
      if (!a) return reject("left term undefined");
      auto b = eval_projective(inst.terms[1], w.proj);
      if (!b) return reject("right term undefined");
      if (*a == *b) return reject("terms evaluate to the same point");
      return {true, ""};
    }
    case ProblemKind::XSat: {
      auto value = eval_projective(inst.terms[0], w.proj);
      if (!value) return reject("undefined sub-term");
      std::optional<ProjPoint> rhs;
      if (inst.rhs->kind() == Term::Kind::Var) {
        auto it = w.proj.find(inst.rhs->name());
        if (it == w.proj.end())
          return reject("designated variable '" + inst.rhs->name() + "' unassigned");
        rhs = it->second;
      } else {
        rhs = inst.rhs->proj_value();
      }
      if (!(*value == *rhs)) return reject("value differs from the right-hand side");
      return {true, ""};
    }
    case ProblemKind::XUvec:
      return reject("XUVEC is an affine problem");
  }
  return reject("corrupt instance");
}

}  // namespace

Verdict verify_witness(const Instance& inst, const Witness& w) {
  if (w.mode != inst.mode) return reject("witness mode differs from instance mode");
  try {
    return inst.mode == EvalMode::Affine ? verify_affine(inst, w)
                                         : verify_projective(inst, w);
  } catch (const EvalError& e) {
    return reject(e.what());
  }
}

Witness witness_to_affine_reps(const Witness& w) {
  Witness out;
  out.mode = EvalMode::Affine;
  out.roots = w.roots;
  if (w.mode == EvalMode::Affine) {
    out.affine = w.affine;
    return out;
  }
  for (const auto& [name, p] : w.proj) out.affine.emplace(name, p.rep());
  return out;
}

Witness witness_to_projective(const Witness& w) {
  Witness out;
  out.mode = EvalMode::Projective;
  out.roots = w.roots;
  if (w.mode == EvalMode::Projective) {
    out.proj = w.proj;
    return out;
  }
  for (const auto& [name, v] : w.affine) {
    if (v.is_zero())
      throw ReductionError("zero vector for '" + name + "' has no projective class");
    out.proj.emplace(name, ProjPoint(v));
  }
  return out;
}

Instance nonequiv_to_nontriv(const TermPtr& s, const TermPtr& t, bool constants_allowed) {
  if (free_variables(s) != free_variables(t))
    throw ReductionError("the compared terms must share one variable set");
  Instance inst;
  inst.kind = ProblemKind::XNontriv;
  inst.mode = EvalMode::Affine;
  inst.constants_allowed = constants_allowed;
  inst.terms = {Term::cross(s, t)};
  inst.validate();
  return inst;
}

std::optional<std::pair<TermPtr, TermPtr>> nontriv_to_nonequiv(const TermPtr& t) {
  if (t->kind() != Term::Kind::Cross) return std::nullopt;
  return std::make_pair(t->left(), t->right());
}

Vec3 sprime_value(const Vec3& s, const Vec3& w) {
  Vec3 sxw = cross(s, w);
  return cross(cross(cross(w, sxw), s), cross(s, sxw));
}

Instance projective_to_affine_xsat(const Instance& inst) {
  if (inst.kind != ProblemKind::XSat || inst.mode != EvalMode::Projective)
    throw ReductionError("expected a projective XSAT instance");
  if (!inst.rhs || inst.rhs->kind() != Term::Kind::Var)
    throw ReductionError("the right-hand side must be a designated variable");
  auto vars = inst.variables();
  std::string wname = "W";
  for (int k = 0; std::count(vars.begin(), vars.end(), wname); ++k)
    wname = "W" + std::to_string(k);

  TermPtr s = inst.terms[0];
  TermPtr W = Term::var(wname);
  TermPtr sxw = Term::cross(s, W);
  TermPtr sprime =
      Term::cross(Term::cross(Term::cross(W, sxw), s), Term::cross(s, sxw));

  Instance out;
  out.kind = ProblemKind::XSat;
  out.mode = EvalMode::Affine;
  out.constants_allowed = inst.constants_allowed;
  out.terms = {sprime};
  out.rhs = Term::var(inst.designated);
  out.designated = inst.designated;
  out.validate();
  return out;
}

Witness xsat_witness_proj_to_affine(const Instance& proj_inst, const Instance& affine_inst,
                                    const Witness& w) {
  Verdict v = verify_witness(proj_inst, w);
  if (!v.accepted) throw ReductionError("witness rejected: " + v.reason);

  Witness affine = witness_to_affine_reps(w);
  Vec3 u = eval_affine(proj_inst.terms[0], affine.affine);
  const Vec3& d = affine.affine.at(proj_inst.designated);
  // u = mu * d since the projective equation holds on these representatives
  Scalar mu = !d.x.is_zero() ? u.x / d.x : (!d.y.is_zero() ? u.y / d.y : u.z / d.z);
  if (!(u == mu * d)) throw ReductionError("witness value is not a multiple of the rhs");

  std::string wname;
  for (const auto& name : affine_inst.variables())
    if (!affine.affine.count(name)) wname = name;
  if (wname.empty()) throw ReductionError("affine instance has no fresh scaling variable");

  const Vec3 probes[] = {Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1},
                         Vec3{1, 1, 0}, Vec3{1, 1, 1}, Vec3{2, 1, 0}};
  for (const Vec3& probe : probes) {
    Vec3 val = sprime_value(u, probe);
    if (val.is_zero()) continue;
    Scalar kappa = !u.x.is_zero() ? val.x / u.x : (!u.y.is_zero() ? val.y / u.y : val.z / u.z);
    if (!(val == kappa * u)) continue;
    auto lambda = Scalar::try_nth_root((kappa * mu).inverse(), 3);
    if (!lambda) continue;
    affine.affine[wname] = *lambda * probe;
    Vec3 check = eval_affine(affine_inst.terms[0], affine.affine);
    if (!(check == d)) throw ReductionError("scaled witness failed verification");
    return affine;
  }
  throw ReductionError("needs a cube root that is not rational over the witness field");
}

UnitVectorTransport xuvec_from_nontriv(const TermPtr& t, const Witness& w) {
  if (w.mode != EvalMode::Affine)
    throw ReductionError("XUVEC transport takes an affine witness");
  Vec3 u = eval_affine(t, w.affine);
  if (u.is_zero()) throw ReductionError("not an XNONTRIV witness: value is zero");

  UnitVectorTransport out;
  out.witness = w;
  out.rotation = Mat3::identity();
  out.scale = Scalar(1);
  if (u == kE3) return out;

  auto degrees = multidegree(t);
  if (degrees.empty())
    throw ReductionError("term has no variable leaf; transport unsupported");
  std::string var;
  long long d = 0;
  for (const auto& [name, deg] : degrees)
    if (deg > 0 && (d == 0 || deg < d)) {
      var = name;
      d = deg;
    }

  Scalar q = dot(u, u);
  Scalar mu;
  if ((d & (d - 1)) == 0) {
    // d a power of two: iterated square roots of |u| stay in a tower
    Scalar x = Scalar::sqrt(q);
    for (long long k = 1; k < d; k *= 2) x = Scalar::sqrt(x);
    mu = x.inverse();
  } else {
    auto root = Scalar::try_nth_root(q, 2 * static_cast<unsigned long>(d));
    if (!root)
      throw ReductionError("needs a " + std::to_string(d) +
                           "-th root, not constructible in quadratic towers");
    mu = root->inverse();
  }

  out.scaled_var = var;
  out.scale = mu;
  out.witness.affine[var] = mu * w.affine.at(var);
  Vec3 unit = eval_affine(t, out.witness.affine);
  if (!dot(unit, unit).is_one())
    throw ReductionError("scaling did not normalize the value");
  if (unit == kE3) return out;

  Vec3 axis_cross;
  for (const Vec3& e : {Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}}) {
    axis_cross = cross(e, unit);
    if (!axis_cross.is_zero()) break;
  }
  Scalar len = Scalar::sqrt(dot(axis_cross, axis_cross));
  Vec3 r1 = len.inverse() * axis_cross;
  Vec3 r3 = unit;
  Vec3 r2 = cross(r3, r1);
  out.rotation = Mat3{{r1, r2, r3}};

  for (auto& [name, vec] : out.witness.affine) vec = out.rotation * vec;
  if (!(eval_affine(t, out.witness.affine) == kE3))
    throw ReductionError("transport failed to reach e3");
  return out;
}

Instance xnontriv_equation_from_poly(const RingPtr& p) {
  Instance xsat = compile_constant_free(p);
  Instance inst;
  inst.kind = ProblemKind::XNontriv;
  inst.mode = EvalMode::Affine;
  inst.constants_allowed = false;
  inst.terms = {Term::cross(xsat.terms[0], xsat.rhs)};
  inst.compiled = xsat.compiled;
  inst.validate();
  return inst;
}

}  // namespace xsat
