#pragma once

#include <optional>

#include "xsat/instance.hpp"

namespace xsat {

struct SearchConfig {
  long bound = 2;                  // coordinate bound N
  long long budget = 1'000'000;    // max evaluations
  unsigned long seed = 0;          // random strategy only
  bool theta_grid = false;         // root-space grid for compiled instances
  int threads = 1;
};

enum class SearchOutcome { Found, Exhausted, BudgetExceeded };

struct SearchResult {
  SearchOutcome outcome = SearchOutcome::BudgetExceeded;
  std::optional<Witness> witness;  // verified before return
  long long evaluations = 0;
};

// All projective classes F(a, b, c) with integer coordinates, gcd 1, max-norm
// at most N, first nonzero coordinate positive; deterministic order starting
// at F(1, 0, 0); no duplicates.
std::vector<ProjPoint> enumerate_proj_points(long n);

// Integer vectors of max-norm at most N, zero included, deterministic order.
std::vector<Vec3> enumerate_affine_points(long n);

// Rationals a/b with |a| <= N, 1 <= b <= N, gcd(|a|, b) = 1, plus 0.
std::vector<Scalar> enumerate_rationals(long n);

// Scans the full per-variable grid product in a fixed order (partitions may
// run in parallel; the verdict is the one the sequential scan would produce).
// Exhausted certifies only that no witness lies on the grid. With theta_grid
// set, a compiled instance is searched in root space instead: the polynomial
// variables range over Theta-encoded grid rationals and the frame points are
// pinned, which is equivalent for compiled equations and exponentially
// smaller.
SearchResult brute_search(const Instance& inst, const SearchConfig& cfg);

// Uniform draws from the same grid, verified before return; deterministic in
// the seed.
SearchResult random_search(const Instance& inst, const SearchConfig& cfg);

}  // namespace xsat
