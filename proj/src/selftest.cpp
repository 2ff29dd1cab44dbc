#include "xsat/selftest.hpp"

#include <random>

namespace xsat {

std::string check_frame_identities(const Frame& f, const Scalar& r, const Scalar& s) {
  auto pc = [](const std::optional<ProjPoint>& a,
               const std::optional<ProjPoint>& b) -> std::optional<ProjPoint> {
    if (!a || !b) return std::nullopt;
    return proj_cross(*a, *b);
  };
  auto pt = [](const Vec3& v) -> std::optional<ProjPoint> { return ProjPoint(v); };
  std::optional<ProjPoint> V1 = f.V1, V2 = f.V2, V3 = f.V3, V12 = f.V12, V23 = f.V23;
  std::optional<ProjPoint> V13 = pt(f.v1 - f.v3);

  auto expect = [](const char* which, const std::optional<ProjPoint>& got,
                   const ProjPoint& want) -> std::string {
    if (!got) return std::string(which) + ": undefined";
    if (!(*got == want)) return std::string(which) + ": wrong point";
    return "";
  };

  // a) F(v1 - rs v2) = V3 x [F(v3 - r v2) x F(v1 - s v3)]
  auto a = pc(V3, pc(pt(f.v3 - r * f.v2), pt(f.v1 - s * f.v3)));
  if (auto e = expect("a", a, ProjPoint(f.v1 - (r * s) * f.v2)); !e.empty()) return e;
  // b) F(v1 - s v3) = V2 x [V23 x F(v1 - s v2)]
  auto b = pc(V2, pc(V23, pt(f.v1 - s * f.v2)));
  if (auto e = expect("b", b, ProjPoint(f.v1 - s * f.v3)); !e.empty()) return e;
  // c) F(v3 - r v2) = V1 x [V13 x F(v1 - r v2)]
  auto c = pc(V1, pc(V13, pt(f.v1 - r * f.v2)));
  if (auto e = expect("c", c, ProjPoint(f.v3 - r * f.v2)); !e.empty()) return e;
  // d) F(v1 - (r-s) v2) = V3 x [([V23 x F(v1 - r v2)] x [V2 x F(v1 - s v3)]) x V3]
  auto d = pc(V3, pc(pc(pc(V23, pt(f.v1 - r * f.v2)), pc(V2, pt(f.v1 - s * f.v3))), V3));
  if (auto e = expect("d", d, ProjPoint(f.v1 - (r - s) * f.v2)); !e.empty()) return e;
  // e) V13 = V2 x (V12 x V23)
  auto ee = pc(V2, pc(V12, V23));
  if (auto e = expect("e", ee, *V13); !e.empty()) return e;

  auto iota_value = [&](const std::optional<ProjPoint>& w) {
    auto wv3 = pc(w, V3);
    return pc(wv3, pc(pc(wv3, V3), V2));
  };
  // f, general position: iota(F(v1 - r v2 + s v3)) = F(v1 - r v2)
  auto general = iota_value(pt(f.v1 - r * f.v2 + s * f.v3));
  if (auto e = expect("f general", general, theta_encode(r, f)); !e.empty()) return e;
  // f, fixpoint on Theta images
  auto fixed = iota_value(theta_encode(r, f));
  if (auto e = expect("f fixpoint", fixed, theta_encode(r, f)); !e.empty()) return e;
  // f, V2-V3 plane: undefined
  Vec3 plane = s.is_zero() ? f.v2 : f.v2 + s * f.v3;
  if (iota_value(pt(plane))) return "f plane: expected undefined";
  return "";
}

Commutation check_commutation(const RingPtr& p, const TermPtr& t_p, const Frame& f,
                              const std::map<std::string, Scalar>& point) {
  ProjAssignment assign;
  for (const auto& [name, value] : point) assign.emplace(name, theta_encode(value, f));
  auto got = eval_projective(t_p, assign);
  if (!got) return Commutation::Undefined;
  return *got == theta_encode(eval_poly(p, point), f) ? Commutation::Match
                                                      : Commutation::Mismatch;
}

namespace {

mpq_class draw_rational(std::mt19937_64& rng, long range) {
  long num = static_cast<long>(rng() % (2 * range + 1)) - range;
  long den = 1 + static_cast<long>(rng() % range);
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

mpq_class draw_nonzero(std::mt19937_64& rng, long range) {
  for (;;) {
    mpq_class q = draw_rational(rng, range);
    if (q != 0) return q;
  }
}

Frame draw_frame(std::mt19937_64& rng) {
  auto basis =
      orthogonal_basis({draw_rational(rng, 5), draw_rational(rng, 5), draw_rational(rng, 5)},
                       {draw_nonzero(rng, 5), draw_nonzero(rng, 5), draw_nonzero(rng, 5)});
  return frame_from_basis(basis[0], basis[1], basis[2]);
}

}  // namespace

SelftestReport run_selftest(unsigned long seed, int frames, int commutation_terms) {
  SelftestReport report;
  std::mt19937_64 rng(seed);

  SelftestLine identities{"frame-identities", 0, 0, ""};
  for (int i = 0; i < frames; ++i) {
    Frame f = draw_frame(rng);
    Scalar r(draw_rational(rng, 9)), s(draw_rational(rng, 9));
    ++identities.runs;
    std::string failure = check_frame_identities(f, r, s);
    if (!failure.empty()) {
      ++identities.failures;
      if (identities.detail.empty()) identities.detail = failure;
    }
  }
  report.lines.push_back(identities);

  SelftestLine gadgets{"gadget-semantics", 0, 0, ""};
  TermPtr R = Term::var("R"), S = Term::var("S");
  for (int i = 0; i < frames; ++i) {
    Frame f = draw_frame(rng);
    FrameRefs refs = constant_frame_refs(f);
    Scalar r(draw_rational(rng, 9)), s(draw_rational(rng, 9));
    ProjAssignment a{{"R", theta_encode(r, f)}, {"S", theta_encode(s, f)}};
    ++gadgets.runs;
    auto mul = eval_projective(gadget_mul(R, S, refs), a);
    auto sub = eval_projective(gadget_sub(R, S, refs), a);
    auto add = eval_projective(gadget_add(R, S, refs), a);
    bool ok = mul && *mul == theta_encode(r * s, f) && sub &&
              *sub == theta_encode(r - s, f) && add && *add == theta_encode(r + s, f);
    if (!ok) {
      ++gadgets.failures;
      if (gadgets.detail.empty()) gadgets.detail = "at r=" + r.str() + ", s=" + s.str();
    }
  }
  report.lines.push_back(gadgets);

  SelftestLine commutation{"compile-commutation", 0, 0, ""};
  long long undefined = 0;
  for (int i = 0; i < commutation_terms; ++i) {
    Frame f = i % 3 ? draw_frame(rng) : standard_frame();
    RingPtr p = random_ring_term(1 + static_cast<int>(rng() % 29), 4, rng(),
                                 ConstantMode::Rational);
    TermPtr t = compile_with_constants(p, f);
    for (int j = 0; j < 5; ++j) {
      std::map<std::string, Scalar> point;
      for (const auto& v : poly_variables(p)) point[v] = Scalar(draw_rational(rng, 9));
      ++commutation.runs;
      switch (check_commutation(p, t, f, point)) {
        case Commutation::Match:
          break;
        case Commutation::Undefined:
          ++undefined;
          break;
        case Commutation::Mismatch:
          ++commutation.failures;
          break;
      }
    }
  }
  if (undefined > 0)
    commutation.detail = std::to_string(undefined) + " undefined evaluations (logged)";
  report.lines.push_back(commutation);

  for (const auto& line : report.lines) report.ok = report.ok && line.failures == 0;
  return report;
}

}  // namespace xsat
