#pragma once

#include <optional>
#include <utility>

#include "xsat/instance.hpp"
#include "xsat/ringterm.hpp"

namespace xsat {

// Exact acceptance check for every problem kind. Rejections carry a reason
// (undefined sub-term, wrong value, zero designated variable, ...).
Verdict verify_witness(const Instance& inst, const Witness& w);

// Witness conversions shared by the transports: canonical representatives one
// way, projective classes the other (zero vectors are rejected).
Witness witness_to_affine_reps(const Witness& w);
Witness witness_to_projective(const Witness& w);

// Projective nonequivalence of s and t (same variable set) as affine
// nontriviality of s x t, quantified over nonzero vectors.
Instance nonequiv_to_nontriv(const TermPtr& s, const TermPtr& t, bool constants_allowed);

// Splits a top-level cross into the two compared terms; nullopt flags the
// trivial case (a term with no top-level product is nontrivial by itself).
std::optional<std::pair<TermPtr, TermPtr>> nontriv_to_nonequiv(const TermPtr& t);

// Value of ((W x (s x W)) x s) x (s x (s x W)): a multiple of s, scaling
// cubically with w.
Vec3 sprime_value(const Vec3& s, const Vec3& w);

// Rewrites a projective XSAT instance (rhs a designated variable) into an
// affine one over a fresh variable W.
Instance projective_to_affine_xsat(const Instance& inst);

// Carries an accepted projective witness over to the affine instance by
// scaling a probe vector for W; succeeds exactly when the required cube root
// is rational over the witness field, and reports otherwise.
Witness xsat_witness_proj_to_affine(const Instance& proj_inst, const Instance& affine_inst,
                                    const Witness& w);

// An accepted XNONTRIV witness rescaled and rotated so the value becomes
// exactly (0, 0, 1), over a quadratic extension tower of the witness field.
struct UnitVectorTransport {
  Witness witness;           // affine, value e3
  Mat3 rotation;             // orientation-preserving orthogonal, exact
  std::string scaled_var;    // which argument was rescaled (empty if none)
  Scalar scale;              // the factor applied to it
};
UnitVectorTransport xuvec_from_nontriv(const TermPtr& t, const Witness& w);

// XNONTRIV instance on t'''_p x A: nontrivial iff p is not identically zero.
Instance xnontriv_equation_from_poly(const RingPtr& p);

}  // namespace xsat
