#include "xsat/search.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <numeric>
#include <random>

#include "xsat/problems.hpp"
#include "xsat/vonstaudt.hpp"

namespace xsat {

namespace {

struct Triple {
  long a, b, c;
};

bool order_key_less(const Triple& x, const Triple& y) {
  auto norm = [](const Triple& t) {
    return std::max({std::abs(t.a), std::abs(t.b), std::abs(t.c)});
  };
  auto abssum = [](const Triple& t) {
    return std::abs(t.a) + std::abs(t.b) + std::abs(t.c);
  };
  if (norm(x) != norm(y)) return norm(x) < norm(y);
  if (abssum(x) != abssum(y)) return abssum(x) < abssum(y);
  return std::tie(y.a, y.b, y.c) < std::tie(x.a, x.b, x.c);  // descending lex
}

}  // namespace

std::vector<ProjPoint> enumerate_proj_points(long n) {
  if (n < 1) throw ReductionError("coordinate bound must be at least 1");
  std::vector<Triple> triples;
  for (long a = -n; a <= n; ++a)
    for (long b = -n; b <= n; ++b)
      for (long c = -n; c <= n; ++c) {
        if (a == 0 && b == 0 && c == 0) continue;
        long lead = a != 0 ? a : (b != 0 ? b : c);
        if (lead < 0) continue;  // one representative per sign class
        long g = std::gcd(std::gcd(std::abs(a), std::abs(b)), std::abs(c));
        if (g != 1) continue;
        triples.push_back({a, b, c});
      }
  std::sort(triples.begin(), triples.end(), order_key_less);
  std::vector<ProjPoint> out;
  out.reserve(triples.size());
  for (const auto& t : triples) out.emplace_back(Vec3{t.a, t.b, t.c});
  return out;
}

std::vector<Vec3> enumerate_affine_points(long n) {
  if (n < 1) throw ReductionError("coordinate bound must be at least 1");
  std::vector<Triple> triples;
  for (long a = -n; a <= n; ++a)
    for (long b = -n; b <= n; ++b)
      for (long c = -n; c <= n; ++c) triples.push_back({a, b, c});
  std::sort(triples.begin(), triples.end(), order_key_less);
  std::vector<Vec3> out;
  out.reserve(triples.size());
  for (const auto& t : triples) out.emplace_back(Scalar(t.a), Scalar(t.b), Scalar(t.c));
  return out;
}

std::vector<Scalar> enumerate_rationals(long n) {
  if (n < 1) throw ReductionError("coordinate bound must be at least 1");
  struct Frac {
    long a, b;
  };
  std::vector<Frac> fracs{{0, 1}};
  for (long b = 1; b <= n; ++b)
    for (long a = -n; a <= n; ++a) {
      if (a == 0) continue;
      if (std::gcd(std::abs(a), b) != 1) continue;
      fracs.push_back({a, b});
    }
  std::sort(fracs.begin(), fracs.end(), [](const Frac& x, const Frac& y) {
    long nx = std::max(std::abs(x.a), x.b), ny = std::max(std::abs(y.a), y.b);
    if (nx != ny) return nx < ny;
    return std::tie(x.b, x.a) < std::tie(y.b, y.a);
  });
  std::vector<Scalar> out;
  out.reserve(fracs.size());
  for (const auto& f : fracs) out.push_back(Scalar::fraction(f.a, f.b));
  return out;
}

namespace {

// One grid axis: the candidate points (projective or affine) one variable
// ranges over, with optional decoded roots alongside.
struct Axis {
  std::string var;
  std::vector<ProjPoint> proj;
  std::vector<Vec3> affine;
  std::vector<Scalar> roots;  // theta axes only, parallel to the points
  size_t size(EvalMode mode) const {
    return mode == EvalMode::Projective ? proj.size() : affine.size();
  }
};

struct Grid {
  std::vector<Axis> axes;
  EvalMode mode;

  unsigned long long total() const {
    unsigned long long t = 1;
    for (const auto& ax : axes) {
      size_t s = ax.size(mode);
      if (s == 0) return 0;
      if (t > (1ull << 62) / s) return 1ull << 62;  // saturate
      t *= s;
    }
    return t;
  }

  Witness assemble(unsigned long long index) const {
    Witness w;
    w.mode = mode;
    for (const auto& ax : axes) {
      size_t s = ax.size(mode);
      size_t pick = static_cast<size_t>(index % s);
      index /= s;
      if (mode == EvalMode::Projective)
        w.proj.emplace(ax.var, ax.proj[pick]);
      else
        w.affine.emplace(ax.var, ax.affine[pick]);
      if (!ax.roots.empty()) w.roots.emplace(ax.var, ax.roots[pick]);
    }
    return w;
  }
};

Grid build_grid(const Instance& inst, const SearchConfig& cfg) {
  Grid grid;
  grid.mode = inst.mode;
  if (cfg.theta_grid) {
    if (!inst.compiled)
      throw ReductionError("theta-grid search needs a compiled instance");
    Frame f = inst.compiled->constant_free || !inst.compiled->frame_basis
                  ? standard_frame()
                  : frame_from_basis((*inst.compiled->frame_basis)[0],
                                     (*inst.compiled->frame_basis)[1],
                                     (*inst.compiled->frame_basis)[2]);
    std::vector<Scalar> rationals = enumerate_rationals(cfg.bound);
    std::vector<ProjPoint> points;
    points.reserve(rationals.size());
    for (const auto& r : rationals) points.push_back(theta_encode(r, f));
    for (const auto& v : inst.compiled->poly_vars) {
      Axis ax;
      ax.var = v;
      ax.roots = rationals;
      if (inst.mode == EvalMode::Projective) {
        ax.proj = points;
      } else {
        for (const auto& p : points) ax.affine.push_back(p.rep());
      }
      grid.axes.push_back(std::move(ax));
    }
    if (inst.compiled->constant_free) {
      auto abc = frame_generating_points(f);
      for (int i = 0; i < 3; ++i) {
        Axis ax;
        ax.var = inst.compiled->frame_vars[i];
        if (inst.mode == EvalMode::Projective)
          ax.proj = {abc[i]};
        else
          ax.affine = {abc[i].rep()};
        grid.axes.push_back(std::move(ax));
      }
    }
    return grid;
  }
  if (inst.mode == EvalMode::Projective) {
    auto points = enumerate_proj_points(cfg.bound);
    for (const auto& v : inst.variables()) {
      Axis ax;
      ax.var = v;
      ax.proj = points;
      grid.axes.push_back(std::move(ax));
    }
  } else {
    auto points = enumerate_affine_points(cfg.bound);
    for (const auto& v : inst.variables()) {
      Axis ax;
      ax.var = v;
      ax.affine = points;
      grid.axes.push_back(std::move(ax));
    }
  }
  return grid;
}

constexpr unsigned long long kNotFound = ~0ull;

}  // namespace

SearchResult brute_search(const Instance& inst, const SearchConfig& cfg) {
  Grid grid = build_grid(inst, cfg);
  unsigned long long total = grid.total();
  unsigned long long limit = total;
  if (cfg.budget >= 0 && static_cast<unsigned long long>(cfg.budget) < limit)
    limit = static_cast<unsigned long long>(cfg.budget);

  int threads = std::max(1, cfg.threads);
  std::atomic<unsigned long long> best{kNotFound};
  auto scan = [&](unsigned long long lo, unsigned long long hi) {
    for (unsigned long long i = lo; i < hi; ++i) {
      if (best.load(std::memory_order_relaxed) < lo) return;  // earlier chunk won
      Witness w = grid.assemble(i);
      if (verify_witness(inst, w).accepted) {
        unsigned long long seen = best.load(std::memory_order_relaxed);
        while (i < seen && !best.compare_exchange_weak(seen, i)) {
        }
        return;
      }
    }
  };

  if (threads == 1 || limit < 1024) {
    scan(0, limit);
  } else {
    unsigned long long chunk = (limit + threads - 1) / threads;
    std::vector<std::future<void>> futures;
    for (int t = 0; t < threads; ++t) {
      unsigned long long lo = chunk * t;
      unsigned long long hi = std::min(limit, lo + chunk);
      if (lo >= hi) break;
      futures.push_back(std::async(std::launch::async, scan, lo, hi));
    }
    for (auto& f : futures) f.get();
  }

  SearchResult res;
  unsigned long long found = best.load();
  if (found != kNotFound) {
    res.outcome = SearchOutcome::Found;
    res.witness = grid.assemble(found);
    res.evaluations = static_cast<long long>(found) + 1;
  } else if (limit == total && total < (1ull << 62)) {
    res.outcome = SearchOutcome::Exhausted;
    res.evaluations = static_cast<long long>(limit);
  } else {
    res.outcome = SearchOutcome::BudgetExceeded;
    res.evaluations = static_cast<long long>(limit);
  }
  return res;
}

SearchResult random_search(const Instance& inst, const SearchConfig& cfg) {
  Grid grid = build_grid(inst, cfg);
  unsigned long long total = grid.total();
  SearchResult res;
  if (total == 0) {
    res.outcome = SearchOutcome::Exhausted;
    return res;
  }
  std::mt19937_64 rng(cfg.seed);
  // modulo rejection keeps the draw uniform and platform-independent
  unsigned long long reject_above = ~0ull - (~0ull % total);
  auto draw = [&]() {
    for (;;) {
      unsigned long long r = rng();
      if (r < reject_above || reject_above == 0) return r % total;
    }
  };
  for (long long i = 0; i < cfg.budget; ++i) {
    Witness w = grid.assemble(draw());
    ++res.evaluations;
    if (verify_witness(inst, w).accepted) {
      res.outcome = SearchOutcome::Found;
      res.witness = std::move(w);
      return res;
    }
  }
  res.outcome = SearchOutcome::BudgetExceeded;
  return res;
}

}  // namespace xsat
