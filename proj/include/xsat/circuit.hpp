#pragma once

#include <map>
#include <string>
#include <vector>

#include "xsat/ringterm.hpp"
#include "xsat/term.hpp"

namespace xsat {

// Shared DAG of scalar arithmetic gates in topological order. Structurally
// identical gates are deduplicated on construction (hash-consing on op and
// operand ids, constants interned by value), which keeps coordinatized terms
// linear-size despite heavy gadget reuse.
class Circuit {
 public:
  enum class Op { Input, Const, Add, Sub, Mul };

  struct Gate {
    Op op;
    int lhs = -1, rhs = -1;  // operand gate ids, always smaller than this id
    std::string label;       // Input
    Scalar value;            // Const
  };

  const std::vector<Gate>& gates() const { return gates_; }
  const std::vector<int>& outputs() const { return outputs_; }
  const std::vector<std::string>& inputs() const { return input_labels_; }
  size_t size() const { return gates_.size(); }

  int add_input(const std::string& label);
  int add_const(const Scalar& value);
  int add_gate(Op op, int lhs, int rhs);
  void set_outputs(std::vector<int> outs);

  // One gate per line "id op lhs rhs" after an outputs header.
  std::string dump() const;

 private:
  std::vector<Gate> gates_;
  std::vector<int> outputs_;
  std::vector<std::string> input_labels_;
  std::map<std::string, int> input_ids_;
  std::map<Scalar, int> const_ids_;
  std::map<std::tuple<int, int, int>, int> gate_ids_;
};

// Scalar coordinates of a cross term: a 3-output circuit computing the value
// of eval_affine coordinate-wise. Inputs are labelled V[0], V[1], V[2] per
// vector variable. Rejects projective constants.
Circuit coordinatize(const TermPtr& t);

// Sum of squares of the three outputs; zero iff all outputs vanish.
Circuit sos(const Circuit& c);

// Ring terms as single-output circuits (inputs keep the variable names).
Circuit ring_to_circuit(const RingPtr& p);

std::vector<Scalar> eval_circuit(const Circuit& c,
                                 const std::map<std::string, Scalar>& point);

// Syntactic degree upper bound: max over outputs, Add/Sub take max, Mul sums.
long long degree_bound(const Circuit& c);

struct PitResult {
  bool nonzero = false;
  std::map<std::string, Scalar> witness;  // verifying point when nonzero
  mpz_class sample_set_size;              // |S|
  int trials = 0;                         // trials actually run
  std::string error_bound;                // "2^-k", or "exact" for input-free circuits
};

// Randomized identity test for a single-output circuit: draws every input
// uniformly from a symmetric integer set with |S| >= 2^k * degree and
// evaluates exactly, so a NonZero verdict always carries a verifying point.
// After `trials` all-zero draws returns ProbablyZero with one-sided error at
// most 2^-k per trial. Deterministic for a fixed seed.
PitResult pit_random(const Circuit& c, int error_exponent, unsigned long seed,
                     int trials = 8);

}  // namespace xsat
