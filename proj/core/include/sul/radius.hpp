#pragma once

// Last sign change of P f along rays. Every supported pair (P, f) has
// P f = (non-negative angular factor) x (radial factor), so the problem is
// one-dimensional in r = |x|.

#include "sul/reps.hpp"
#include "sul/weights.hpp"

namespace sul {

struct RadiusResult {
  /// Location of the last sign change of the radial factor (0 if it never
  /// changes sign).
  double r = 0.0;
  /// The radial factor has the sign `sign_at_infinity` on (certified_tail_from, inf).
  double certified_tail_from = 0.0;
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  int sign_at_infinity = 0;

  /// r(P f): r when P f is eventually non-negative, +inf otherwise.
  double value() const;
  bool eventually_nonnegative() const noexcept { return sign_at_infinity > 0; }
};

inline constexpr double kDefaultRadiusTol = 1e-10;

/// Throws std::invalid_argument for the zero function or when the harmonic
/// factors of w and f differ.
RadiusResult last_sign_change(const GaussianMixture& f, const Weight& w, double tol = kDefaultRadiusTol);
RadiusResult last_sign_change(const LaguerreFunction& f, const Weight& w, double tol = kDefaultRadiusTol);

/// sqrt(r(P f) r(s (-i)^r P f^)). Throws std::domain_error when either side
/// is not eventually non-negative or when s (-i)^r F[f] is not real.
double scaled_radius_product(const GaussianMixture& f, const Weight& w, int s);

}  // namespace sul
