#pragma once

#include <random>
#include <vector>

#include "xsat/circuit.hpp"
#include "xsat/selftest.hpp"
#include "xsat/ringterm.hpp"
#include "xsat/term.hpp"
#include "xsat/vonstaudt.hpp"

namespace xsat::test {

inline mpq_class random_rational(std::mt19937_64& rng, long range = 9) {
  long num = static_cast<long>(rng() % (2 * range + 1)) - range;
  long den = 1 + static_cast<long>(rng() % range);
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

inline mpq_class random_nonzero_rational(std::mt19937_64& rng, long range = 9) {
  for (;;) {
    mpq_class q = random_rational(rng, range);
    if (q != 0) return q;
  }
}

inline Vec3 random_vec3(std::mt19937_64& rng, long range = 9) {
  return Vec3{Scalar(random_rational(rng, range)), Scalar(random_rational(rng, range)),
              Scalar(random_rational(rng, range))};
}

inline Vec3 random_nonzero_vec3(std::mt19937_64& rng, long range = 9) {
  for (;;) {
    Vec3 v = random_vec3(rng, range);
    if (!v.is_zero()) return v;
  }
}

inline Mat3 random_rotation(std::mt19937_64& rng, long range = 5) {
  return rational_rotation(random_rational(rng, range), random_rational(rng, range),
                           random_rational(rng, range));
}

inline Frame random_frame(std::mt19937_64& rng, long range = 5) {
  auto basis = orthogonal_basis({random_rational(rng, range), random_rational(rng, range),
                                 random_rational(rng, range)},
                                {random_nonzero_rational(rng, range),
                                 random_nonzero_rational(rng, range),
                                 random_nonzero_rational(rng, range)});
  return frame_from_basis(basis[0], basis[1], basis[2]);
}

// Random cross term over the given variable names; leaves are variables only.
inline TermPtr random_cross_term(std::mt19937_64& rng, int leaves,
                                 const std::vector<std::string>& vars) {
  if (leaves <= 1) return Term::var(vars[rng() % vars.size()]);
  int left = 1 + static_cast<int>(rng() % (leaves - 1));
  return Term::cross(random_cross_term(rng, left, vars),
                     random_cross_term(rng, leaves - left, vars));
}

// Every cross term with exactly `leaves` leaves over the variable names
// (all tree shapes x all leaf labelings).
inline void enumerate_terms(int leaves, const std::vector<std::string>& vars,
                            std::vector<TermPtr>& out) {
  if (leaves == 1) {
    for (const auto& v : vars) out.push_back(Term::var(v));
    return;
  }
  for (int l = 1; l < leaves; ++l) {
    std::vector<TermPtr> ls, rs;
    enumerate_terms(l, vars, ls);
    enumerate_terms(leaves - l, vars, rs);
    for (const auto& a : ls)
      for (const auto& b : rs) out.push_back(Term::cross(a, b));
  }
}

// Evaluates a circuit over DensePoly values: the independent dense oracle for
// identity testing (never uses the randomized path).
inline std::vector<DensePoly> circuit_to_dense(const Circuit& c) {
  std::vector<std::string> vars = c.inputs();
  std::sort(vars.begin(), vars.end());
  std::vector<DensePoly> values;
  values.reserve(c.size());
  for (const auto& g : c.gates()) {
    switch (g.op) {
      case Circuit::Op::Input:
        values.push_back(DensePoly::variable(vars, g.label));
        break;
      case Circuit::Op::Const:
        values.push_back(DensePoly::constant(vars, g.value));
        break;
      case Circuit::Op::Add:
        values.push_back(values[g.lhs] + values[g.rhs]);
        break;
      case Circuit::Op::Sub:
        values.push_back(values[g.lhs] - values[g.rhs]);
        break;
      case Circuit::Op::Mul:
        values.push_back(values[g.lhs] * values[g.rhs]);
        break;
    }
  }
  std::vector<DensePoly> out;
  for (int o : c.outputs()) out.push_back(values[o]);
  return out;
}

// Dense zero test of the three coordinate polynomials; equivalent to the sum
// of squares being the zero polynomial over any subfield of R, but avoids the
// squaring blow-up.
inline bool coordinates_identically_zero(const TermPtr& t) {
  auto outs = circuit_to_dense(coordinatize(t));
  return outs[0].is_zero() && outs[1].is_zero() && outs[2].is_zero();
}

// The term of Example 1-style shape that vanishes identically:
// (((V x (V x W)) x V) x (V x W))
inline TermPtr everywhere_zero_term() {
  return parse_term("(((V x (V x W)) x V) x (V x W))");
}

}  // namespace xsat::test
