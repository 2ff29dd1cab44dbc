#pragma once

#include <array>
#include <optional>

#include "xsat/geometry.hpp"
#include "xsat/term.hpp"

namespace xsat {

// Orthogonal right-handed basis together with the five projective points
// derived from it: Vj = F(vj), V12 = F(v1 - v2), V23 = F(v2 - v3). The basis
// representatives matter (V12 and V23 depend on them), so the frame carries
// the affine vectors, not just the points.
struct Frame {
  Vec3 v1, v2, v3;
  ProjPoint V1, V2, V3, V12, V23;
};

Frame standard_frame();  // e1, e2, e3

// Requires pairwise orthogonal nonzero vectors; a left-handed triple has all
// three signs flipped.
Frame frame_from_basis(const Vec3& b1, const Vec3& b2, const Vec3& b3);

// Field elements as projective points: Theta(r) = F(v1 - r*v2).
// Theta(0) = V1 and Theta(1) = V12.
ProjPoint theta_encode(const Scalar& r, const Frame& f);

// Inverse of theta_encode; nullopt when the point is not in the image (not
// orthogonal to v3, or equal to V2).
std::optional<Scalar> theta_decode(const ProjPoint& p, const Frame& f);

// Coordinates of w in the frame's orthogonal basis (always exact).
std::array<Scalar, 3> basis_coordinates(const Vec3& w, const Frame& f);

// The five frame references a gadget needs, as terms: either projective
// constant leaves over a concrete frame, or the shared sub-terms over three
// point variables A, B, C. V13 = F(v1 - v3) is derived once and shared.
struct FrameRefs {
  TermPtr V1, V2, V3, V12, V23, V13;
};

FrameRefs constant_frame_refs(const Frame& f);

// V12 := B, V2 := (AxB)xA, V23 := CxA, V1 := V2xV23, V3 := (V23x(BxV2))xB,
// with node sharing across the five results.
FrameRefs frame_subterms(const TermPtr& A, const TermPtr& B, const TermPtr& C);

// Constant-size gadget terms: on Theta-encoded arguments they evaluate to the
// Theta encoding of the product / difference / sum whenever defined.
TermPtr gadget_mul(const TermPtr& R, const TermPtr& S, const FrameRefs& refs);
TermPtr gadget_sub(const TermPtr& R, const TermPtr& S, const FrameRefs& refs);
TermPtr gadget_add(const TermPtr& R, const TermPtr& S, const FrameRefs& refs);

// Normalizer: on W = F(v1 - r*v2 + s*v3) evaluates to Theta(r); fixes
// Theta-images; undefined for W in the V2-V3 plane.
TermPtr iota(const TermPtr& W, const FrameRefs& refs);

// The three points that recover a frame constant-free: A = F(v1),
// B = F(v2 - v1), C = F(v2 + v3).
std::array<ProjPoint, 3> frame_generating_points(const Frame& f);

}  // namespace xsat
