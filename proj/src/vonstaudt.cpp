#include "xsat/vonstaudt.hpp"

namespace xsat {

Frame standard_frame() {
  return frame_from_basis(Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1});
}

Frame frame_from_basis(const Vec3& b1, const Vec3& b2, const Vec3& b3) {
  if (b1.is_zero() || b2.is_zero() || b3.is_zero())
    throw FieldError("basis vector is zero");
  if (!dot(b1, b2).is_zero() || !dot(b2, b3).is_zero() || !dot(b1, b3).is_zero())
    throw FieldError("basis is not orthogonal");
  Vec3 v1 = b1, v2 = b2, v3 = b3;
  if (dot(v1, cross(v2, v3)).sign() < 0) {
    v1 = -v1;
    v2 = -v2;
    v3 = -v3;
  }
  return Frame{v1,
               v2,
               v3,
               ProjPoint(v1),
               ProjPoint(v2),
               ProjPoint(v3),
               ProjPoint(v1 - v2),
               ProjPoint(v2 - v3)};
}

ProjPoint theta_encode(const Scalar& r, const Frame& f) {
  return ProjPoint(f.v1 - r * f.v2);
}

std::array<Scalar, 3> basis_coordinates(const Vec3& w, const Frame& f) {
  return {dot(w, f.v1) / dot(f.v1, f.v1), dot(w, f.v2) / dot(f.v2, f.v2),
          dot(w, f.v3) / dot(f.v3, f.v3)};
}

std::optional<Scalar> theta_decode(const ProjPoint& p, const Frame& f) {
  auto [alpha, beta, gamma] = basis_coordinates(p.rep(), f);
  if (!gamma.is_zero()) return std::nullopt;  // not orthogonal to v3
  if (alpha.is_zero()) return std::nullopt;   // p = V2, slope infinite
  return -(beta / alpha);
}

FrameRefs constant_frame_refs(const Frame& f) {
  return FrameRefs{Term::proj_const(f.V1),
                   Term::proj_const(f.V2),
                   Term::proj_const(f.V3),
                   Term::proj_const(f.V12),
                   Term::proj_const(f.V23),
                   Term::proj_const(ProjPoint(f.v1 - f.v3))};
}

FrameRefs frame_subterms(const TermPtr& A, const TermPtr& B, const TermPtr& C) {
  TermPtr AxB = Term::cross(A, B);
  TermPtr V2 = Term::cross(AxB, A);
  TermPtr V23 = Term::cross(C, A);
  TermPtr V1 = Term::cross(V2, V23);
  TermPtr V3 = Term::cross(Term::cross(V23, Term::cross(B, V2)), B);
  TermPtr V12 = B;
  TermPtr V13 = Term::cross(V2, Term::cross(V12, V23));
  return FrameRefs{V1, V2, V3, V12, V23, V13};
}

// F(v3 - r*v2) from Theta(r): V1 x (V13 x R)
static TermPtr slope_on_v3(const TermPtr& R, const FrameRefs& refs) {
  return Term::cross(refs.V1, Term::cross(refs.V13, R));
}

// F(v1 - s*v3) from Theta(s): V2 x (V23 x S)
static TermPtr slope_to_v3(const TermPtr& S, const FrameRefs& refs) {
  return Term::cross(refs.V2, Term::cross(refs.V23, S));
}

TermPtr gadget_mul(const TermPtr& R, const TermPtr& S, const FrameRefs& refs) {
  return Term::cross(refs.V3, Term::cross(slope_on_v3(R, refs), slope_to_v3(S, refs)));
}

TermPtr gadget_sub(const TermPtr& R, const TermPtr& S, const FrameRefs& refs) {
  TermPtr inner = Term::cross(Term::cross(refs.V23, R),
                              Term::cross(refs.V2, slope_to_v3(S, refs)));
  return Term::cross(refs.V3, Term::cross(inner, refs.V3));
}

TermPtr gadget_add(const TermPtr& R, const TermPtr& S, const FrameRefs& refs) {
  // r + s = r - (0 - s), with 0 encoded as V1
  return gadget_sub(R, gadget_sub(refs.V1, S, refs), refs);
}

TermPtr iota(const TermPtr& W, const FrameRefs& refs) {
  TermPtr wv3 = Term::cross(W, refs.V3);
  return Term::cross(wv3, Term::cross(Term::cross(wv3, refs.V3), refs.V2));
}

std::array<ProjPoint, 3> frame_generating_points(const Frame& f) {
  // C x A must land on F(v2 - v3); weighting by the squared lengths corrects
  // for bases whose vectors are not all the same length (for the standard
  // basis this is just F(v2 + v3)).
  Vec3 c = dot(f.v3, f.v3) * f.v2 + dot(f.v2, f.v2) * f.v3;
  return {ProjPoint(f.v1), ProjPoint(f.v2 - f.v1), ProjPoint(c)};
}

}  // namespace xsat
