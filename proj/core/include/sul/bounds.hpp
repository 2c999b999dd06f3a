#pragma once

// Closed-form upper and lower bounds, the power-weight case analysis, known
// sharp constants and the one-dimensional oscillating-bump demo.

#include <optional>
#include <string>
#include <vector>

#include "sul/radius.hpp"
#include "sul/reps.hpp"
#include "sul/weights.hpp"

namespace sul {

/// s i^{ell + r}. Both exponents have the same parity for every supported
/// weight, so this is always +1 or -1.
int regime_sign(int s, const Weight& w);

struct Thm1Result {
  std::string regime;  // "f0", "g1_vanishing" or "f1"
  double analytic = 0.0;
  double numeric = 0.0;  // certified r(P witness)
  GaussianMixture witness;
  double a = 0.0;  // a0 or a1
  double b = 0.0;  // b1 (f1 regime only)
  double amplitude = 0.0;  // A0 or A1
  double rho = 0.0;
  /// f1 regime: the two explicit radii whose maximum is `analytic`.
  double r1 = 0.0;
  double r2 = 0.0;
  /// g1_vanishing regime: (a1, r(P g1)) for a1 = 10, 100, 1000.
  std::vector<std::pair<double, double>> vanishing;
};

/// Explicit witness for the upper bound on the eigenfunction problem.
Thm1Result thm1_upper(int s, const Weight& w);

/// Upper bound for the L^1 admissibility constant of a homogeneous weight
/// with degree >= 0. Throws std::domain_error when the sub-level sets are
/// not of finite measure or the degree is negative.
double thm2_constant(const Weight& w);

/// Lower bound from the Hoelder chain. q in [1, inf]; pass
/// std::numeric_limits<double>::infinity() for q = inf.
double thm3_lower(const Weight& w, double q, double K, double C);

/// (Gamma(d/2 + 1) / 2)^{1/d} / sqrt(pi)
double bck_lower(int d);

/// The epsilon(d) window half-width for power weights.
double power_window(int d);

/// Explicit q' = 1 lower bound for |x|^gamma, gamma >= 0, in dimension d.
double power_lower_explicit(int d, double gamma);

/// The gamma-uniform floor (Gamma(d/2+1) / (2 pi^{d/2} e^{1/(2e)}))^{1/d}.
double power_lower_floor(int d);

/// min{d, |d + 2 floor(g)|, |-d + 2 floor(-g)|}
double power_floor_dimension(int d, double gamma);

struct BoundReport {
  int s = 1;
  Weight weight;
  std::optional<double> lower;
  std::string lower_method;
  std::optional<double> lower_floor;  // gamma-uniform version, when available
  std::optional<double> upper_analytic;
  std::optional<double> upper_numeric;
  std::string upper_method;
  std::optional<double> sharp;
  /// Data of the dimension shift used by the lower bound, if any.
  int shift_ell = 0;
  int shifted_dim = 0;
  double shifted_gamma = 0.0;
  int shifted_sign = 0;
  std::string note;
};

/// Full case analysis for P = |x|^gamma. Throws for gamma <= -d.
BoundReport corollary_power(int s, int d, double gamma);

/// Known exact values of the infimum for the weight x_1...x_ell in R^d.
std::optional<double> sharp_constant(int s, int d, int ell);

struct SharpEntry {
  int base = 0;
  int ell = 0;
  int d = 0;
  int s = 0;
  double value = 0.0;
};

/// Every tabulated entry (ell = 0 rows included once each, plus d = 1).
const std::vector<SharpEntry>& sharp_table();

struct NazarovPoint {
  double t = 0.0;
  double numerator = 0.0;    // || f_t |x|^alpha ||_{L^q[-delta, delta]}
  double denominator = 0.0;  // || f_t |x|^gamma ||_{L^1(R)}
  double ratio = 0.0;
};

struct NazarovReport {
  double delta = 0.0;
  double alpha = 0.0;
  double gamma = 0.0;
  double q = 0.0;
  bool counterexample_regime = false;  // alpha < gamma + 1/q'
  bool increasing = false;
  std::vector<NazarovPoint> points;
};

/// f_t = h_t + F[h_t] with h_t = (1 - (x/delta)^2)^3_+ cos(2 pi t x) in d = 1.
NazarovReport nazarov_demo(double delta, double alpha, double gamma, double q, const std::vector<double>& ts);

/// || (1 - (x/delta)^2)^3_+ |x|^gamma ||_1
double bump_weighted_l1(double delta, double gamma);

}  // namespace sul
