#pragma once

#include <map>

#include "xsat/instance.hpp"
#include "xsat/ringterm.hpp"
#include "xsat/vonstaudt.hpp"

namespace xsat {

// Structural induction p -> t_p over a concrete frame: variables stay
// variables, constants become projective constants Theta(c), ring operations
// become gadgets. Theta commutes with the construction: evaluating t_p on
// Theta-encoded arguments yields Theta(p(...)) wherever defined.
TermPtr compile_with_constants(const RingPtr& p, const Frame& f);

// t'_p := t_p(iota(X1), ..., iota(Xn)) = V1, as a projective XSAT instance
// with constants.
Instance compile_equation(const RingPtr& p, const Frame& f);

// Constant-free pipeline t'''_p = A: frame references become the shared
// sub-terms over fresh point variables A, B, C, and integer constants are
// decomposed into 0 / 1 / -1 primitives. Non-integer constants are rejected.
Instance compile_constant_free(const RingPtr& p);

// Satisfying assignment from a root: A, B, C from the generating points (for
// constant-free instances), Xj := Theta(root_j). Throws when the given values
// are not a joint root.
Witness witness_from_root(const std::map<std::string, Scalar>& roots, const RingPtr& p,
                          const Instance& inst);

// The inverse direction: reconstructs the frame from the witness (for
// constant-free instances via the A, B, C values), decodes every Xj, and
// checks the decoded tuple is a root. Failures are reported, never guessed.
std::map<std::string, Scalar> root_from_witness(const Witness& w, const RingPtr& p,
                                                const Instance& inst);

}  // namespace xsat
