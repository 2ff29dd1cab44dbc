#pragma once

#include <stdexcept>
#include <string>

namespace xsat {

// Exact-arithmetic contract violations: division by zero, sqrt of a negative,
// non-orthogonal basis, degenerate extension.
struct FieldError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Syntax errors carry the byte offset into the input.
struct ParseError : std::runtime_error {
  size_t pos;
  ParseError(const std::string& msg, size_t p)
      : std::runtime_error(msg + " (at offset " + std::to_string(p) + ")"), pos(p) {}
};

// Unbound variables and affine/projective mode mismatches during evaluation.
struct EvalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Reduction-level failures: not a root, invalid witness, disallowed constant,
// unsupported transport.
struct ReductionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace xsat
