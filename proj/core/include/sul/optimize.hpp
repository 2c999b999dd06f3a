#pragma once

// Numerical upper bounds for the eigenfunction problem: LP feasibility over
// a truncated Laguerre eigenbasis, bisection on the radius, and independent
// re-certification of every witness.

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sul/radius.hpp"
#include "sul/reps.hpp"
#include "sul/weights.hpp"

namespace sul {

struct Eigenbasis {
  int d = 1;
  HarmonicFactor harmonic;
  std::vector<int> indices;  // Laguerre indices k, same parity, increasing
  UnitPhase eigenvalue;
};

/// Indices k0, k0 + 2, ..., k0 + 2(N-1) whose basis functions have
/// eigenvalue s i^r, r = ell mod 2.
Eigenbasis eigenbasis(int s, int d, const HarmonicFactor& h, int N);

struct LpOptions {
  int grid_size = 0;  // 0: 10 N
  int refinements = 12;
  double tolerance = 1e-4;  // bisection tolerance in r
};

struct LpAttempt {
  bool feasible = false;
  std::vector<double> coeffs;  // LaguerreFunction coefficients (length k_max + 1)
  std::int64_t pivots = 0;
  int rounds = 0;
  double margin = 0.0;
};

/// One LP at radius r (with exchange refinement of negative dips).
LpAttempt solve_at_radius(const Eigenbasis& basis, const Weight& w, double r, const LpOptions& opt = {});

struct Certification {
  RadiusResult radius;
  double integral = 0.0;
  double coeff_norm = 0.0;
  bool integral_ok = false;
};

Certification certify(const LaguerreFunction& f, const Weight& w);

struct BisectionStep {
  double r = 0.0;
  bool feasible = false;
  double certified = 0.0;  // +inf when not feasible or not certified
  std::int64_t pivots = 0;
  int rounds = 0;
};

struct OptimizeResult {
  double r_upper = 0.0;
  std::variant<LaguerreFunction, GaussianMixture> witness;
  int N = 0;
  std::int64_t lp_iterations = 0;
  Certification certification;
  bool fallback = false;  // witness is the explicit Gaussian construction
  double analytic_upper = 0.0;
  std::vector<BisectionStep> steps;
};

/// Bisection on r over the N-term eigenbasis. For N > 10 the run is seeded
/// with the result for ceil(N/2) (a subspace), so r_upper never increases
/// with N.
OptimizeResult bisect_upper_bound(int s, const Weight& w, int N, const LpOptions& opt = {});

struct Corollary4Report {
  int base = 0;
  int ell = 0;
  int d = 0;
  int s = 0;
  double sharp = 0.0;
  double numeric = 0.0;
  double gap = 0.0;
  bool floor_ok = false;  // numeric >= sharp - 1e-3
  OptimizeResult result;
};

Corollary4Report verify_corollary4(int base, int ell, int N, const LpOptions& opt = {});

}  // namespace sul
