#pragma once

#include <string>
#include <vector>

#include "xsat/compile.hpp"
#include "xsat/vonstaudt.hpp"

namespace xsat {

// Frame identity checks at parameters r, s: empty string when all of them
// hold exactly (the five construction identities as projective equalities,
// plus the normalizer's three behaviors), else a description of the first
// failure.
std::string check_frame_identities(const Frame& f, const Scalar& r, const Scalar& s);

enum class Commutation { Match, Undefined, Mismatch };

// Compiled term on Theta-encoded inputs against Theta of the polynomial
// value at one point.
Commutation check_commutation(const RingPtr& p, const TermPtr& t_p, const Frame& f,
                              const std::map<std::string, Scalar>& point);

struct SelftestLine {
  std::string name;
  long long runs = 0;
  long long failures = 0;
  std::string detail;
};

struct SelftestReport {
  std::vector<SelftestLine> lines;
  bool ok = true;
};

// Seeded property runs over random frames and random polynomials: the frame
// identity suite, gadget semantics, and compile commutation.
SelftestReport run_selftest(unsigned long seed, int frames, int commutation_terms);

}  // namespace xsat
