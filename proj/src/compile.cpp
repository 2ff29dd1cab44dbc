#include "xsat/compile.hpp"

#include <unordered_map>

namespace xsat {

namespace {

// Theta(c) for integer c from the {0, 1} primitives V1 = Theta(0) and
// V12 = Theta(1) by gadget double-and-add; nodes shared per value.
struct ConstBuilder {
  const FrameRefs& refs;
  std::map<mpz_class, TermPtr> cache;

  TermPtr theta_term(const mpz_class& n) {
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    TermPtr t;
    if (n == 0) {
      t = refs.V1;
    } else if (n == 1) {
      t = refs.V12;
    } else if (n < 0) {
      t = gadget_sub(refs.V1, theta_term(-n), refs);
    } else if (n % 2 == 0) {
      TermPtr h = theta_term(n / 2);
      t = gadget_add(h, h, refs);
    } else {
      t = gadget_add(theta_term(n - 1), refs.V12, refs);
    }
    cache.emplace(n, t);
    return t;
  }
};

template <typename ConstFn>
TermPtr compile_with_refs(const RingPtr& p, const FrameRefs& refs, ConstFn&& const_term) {
  std::unordered_map<const RingTerm*, TermPtr> memo;
  std::map<std::string, TermPtr> var_nodes;
  auto go = [&](auto&& self, const RingPtr& n) -> TermPtr {
    auto it = memo.find(n.get());
    if (it != memo.end()) return it->second;
    TermPtr t;
    switch (n->kind()) {
      case RingTerm::Kind::Var: {
        auto [vit, fresh] = var_nodes.try_emplace(n->name(), nullptr);
        if (fresh) vit->second = Term::var(n->name());
        t = vit->second;
        break;
      }
      case RingTerm::Kind::Const:
        t = const_term(n->value());
        break;
      case RingTerm::Kind::Add:
        t = gadget_add(self(self, n->left()), self(self, n->right()), refs);
        break;
      case RingTerm::Kind::Sub:
        t = gadget_sub(self(self, n->left()), self(self, n->right()), refs);
        break;
      case RingTerm::Kind::Mul:
        t = gadget_mul(self(self, n->left()), self(self, n->right()), refs);
        break;
    }
    memo.emplace(n.get(), t);
    return t;
  };
  return go(go, p);
}

TermPtr wrap_iota(const TermPtr& t, const std::vector<std::string>& vars,
                  const FrameRefs& refs) {
  std::map<std::string, TermPtr> repl;
  for (const auto& v : vars) repl[v] = iota(Term::var(v), refs);
  return substitute(t, repl);
}

std::array<std::string, 3> fresh_frame_names(const std::vector<std::string>& taken) {
  auto used = [&](const std::string& n) {
    for (const auto& t : taken)
      if (t == n) return true;
    return false;
  };
  for (int k = 0;; ++k) {
    std::string suffix = k == 0 ? "" : std::to_string(k);
    std::array<std::string, 3> names = {"A" + suffix, "B" + suffix, "C" + suffix};
    if (!used(names[0]) && !used(names[1]) && !used(names[2])) return names;
  }
}

Frame frame_of(const Instance& inst) {
  if (!inst.compiled) throw ReductionError("instance carries no compile metadata");
  if (inst.compiled->constant_free) return standard_frame();
  if (!inst.compiled->frame_basis) throw ReductionError("compiled instance without frame");
  const auto& b = *inst.compiled->frame_basis;
  return frame_from_basis(b[0], b[1], b[2]);
}

}  // namespace

TermPtr compile_with_constants(const RingPtr& p, const Frame& f) {
  FrameRefs refs = constant_frame_refs(f);
  return compile_with_refs(p, refs, [&](const Scalar& c) {
    return Term::proj_const(theta_encode(c, f));
  });
}

Instance compile_equation(const RingPtr& p, const Frame& f) {
  FrameRefs refs = constant_frame_refs(f);
  TermPtr t = compile_with_refs(p, refs, [&](const Scalar& c) {
    return Term::proj_const(theta_encode(c, f));
  });
  TermPtr tprime = wrap_iota(t, poly_variables(p), refs);

  Instance inst;
  inst.kind = ProblemKind::XSat;
  inst.mode = EvalMode::Projective;
  inst.constants_allowed = true;
  inst.terms = {tprime};
  inst.rhs = Term::proj_const(f.V1);
  CompiledMeta meta;
  meta.poly_text = print_poly(p);
  meta.poly_vars = poly_variables(p);
  meta.constant_free = false;
  meta.frame_basis = {f.v1, f.v2, f.v3};
  inst.compiled = std::move(meta);
  inst.validate();
  return inst;
}

Instance compile_constant_free(const RingPtr& p) {
  if (!integer_constants_only(p))
    throw ReductionError("constant-free compilation requires integer constants");
  std::vector<std::string> pvars = poly_variables(p);
  auto names = fresh_frame_names(pvars);
  TermPtr A = Term::var(names[0]);
  TermPtr B = Term::var(names[1]);
  TermPtr C = Term::var(names[2]);
  FrameRefs refs = frame_subterms(A, B, C);
  ConstBuilder consts{refs, {}};
  TermPtr t2 = compile_with_refs(p, refs, [&](const Scalar& c) {
    return consts.theta_term(c.rational().get_num());
  });
  TermPtr t3 = wrap_iota(t2, pvars, refs);

  Instance inst;
  inst.kind = ProblemKind::XSat;
  inst.mode = EvalMode::Projective;
  inst.constants_allowed = false;
  inst.terms = {t3};
  inst.rhs = A;
  inst.designated = names[0];
  CompiledMeta meta;
  meta.poly_text = print_poly(p);
  meta.poly_vars = pvars;
  meta.constant_free = true;
  meta.frame_vars = names;
  inst.compiled = std::move(meta);
  inst.validate();
  return inst;
}

Witness witness_from_root(const std::map<std::string, Scalar>& roots, const RingPtr& p,
                          const Instance& inst) {
  if (!inst.compiled) throw ReductionError("instance carries no compile metadata");
  for (const auto& v : inst.compiled->poly_vars)
    if (!roots.count(v)) throw ReductionError("root assignment misses variable '" + v + "'");
  if (!eval_poly(p, roots).is_zero())
    throw ReductionError("the given assignment is not a root");

  Frame f = frame_of(inst);
  Witness w;
  w.mode = EvalMode::Projective;
  if (inst.compiled->constant_free) {
    auto abc = frame_generating_points(f);
    for (int i = 0; i < 3; ++i) w.proj.emplace(inst.compiled->frame_vars[i], abc[i]);
  }
  for (const auto& v : inst.compiled->poly_vars)
    w.proj.emplace(v, theta_encode(roots.at(v), f));
  w.roots = roots;
  return w;
}

namespace {

// Scale rep(target) so that source1 - scaled lies in the class `mix`; used to
// recover basis representatives per the frame reconstruction argument.
Vec3 solve_representative(const Vec3& known, const ProjPoint& target, const ProjPoint& mix) {
  const Vec3& u = mix.rep();
  const Vec3& t = target.rep();
  Scalar alpha = dot(u, known) / dot(known, known);
  Scalar beta = dot(u, t) / dot(t, t);
  if (!(u == alpha * known + beta * t))
    throw ReductionError("witness frame is not orthogonal; decode failure");
  if (alpha.is_zero()) throw ReductionError("degenerate witness frame; decode failure");
  return -(beta / alpha) * t;
}

}  // namespace

std::map<std::string, Scalar> root_from_witness(const Witness& w, const RingPtr& p,
                                                const Instance& inst) {
  if (!inst.compiled) throw ReductionError("instance carries no compile metadata");
  if (w.mode != EvalMode::Projective)
    throw ReductionError("compiled instances take projective witnesses");

  auto lhs = eval_projective(inst.terms[0], w.proj);
  if (!lhs) throw ReductionError("witness does not satisfy the instance (undefined)");
  ProjPoint rhs_value = inst.rhs->kind() == Term::Kind::Var
                            ? w.proj.at(inst.rhs->name())
                            : inst.rhs->proj_value();
  if (!(*lhs == rhs_value))
    throw ReductionError("witness does not satisfy the instance (wrong value)");

  Frame f = standard_frame();
  if (inst.compiled->constant_free) {
    const auto& fv = inst.compiled->frame_vars;
    TermPtr A = Term::var(fv[0]), B = Term::var(fv[1]), C = Term::var(fv[2]);
    FrameRefs refs = frame_subterms(A, B, C);
    auto V1 = eval_projective(refs.V1, w.proj);
    auto V2 = eval_projective(refs.V2, w.proj);
    auto V3 = eval_projective(refs.V3, w.proj);
    auto V12 = eval_projective(refs.V12, w.proj);
    auto V23 = eval_projective(refs.V23, w.proj);
    if (!V1 || !V2 || !V3 || !V12 || !V23)
      throw ReductionError("degenerate witness frame; decode failure");
    Vec3 w1 = V1->rep();
    Vec3 w2 = solve_representative(w1, *V2, *V12);
    Vec3 w3 = solve_representative(w2, *V3, *V23);
    try {
      f = frame_from_basis(w1, w2, w3);
    } catch (const FieldError& e) {
      throw ReductionError(std::string("witness frame reconstruction failed: ") + e.what());
    }
  } else {
    f = frame_of(inst);
  }

  std::map<std::string, Scalar> roots;
  for (const auto& v : inst.compiled->poly_vars) {
    auto it = w.proj.find(v);
    if (it == w.proj.end()) throw ReductionError("witness misses variable '" + v + "'");
    auto [alpha, beta, gamma] = basis_coordinates(it->second.rep(), f);
    if (alpha.is_zero())
      throw ReductionError("variable '" + v + "' lies outside the normalizer's domain");
    roots.emplace(v, -(beta / alpha));
  }
  if (!eval_poly(p, roots).is_zero())
    throw ReductionError("decoded assignment is not a root");
  return roots;
}

}  // namespace xsat
