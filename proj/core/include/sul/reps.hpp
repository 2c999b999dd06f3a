#pragma once

// Closed-form Fourier eigenfunction candidates.
//
// Two representations are used. A GaussianMixture is H(x) sum_j c_j
// exp(-a_j pi |x|^2); its transform is again a mixture, exactly. A
// LaguerreFunction is H(x) sum_k c_k L_k^{(d/2+ell-1)}(2 pi |x|^2)
// exp(-pi |x|^2); each index-k term is an eigenfunction of the transform with
// eigenvalue (-i)^ell (-1)^k.
//
// Transform convention: F[f](xi) = int f(x) exp(-2 pi i x.xi) dx.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sul/weights.hpp"

namespace sul {

/// A power of the imaginary unit, i^k with k taken mod 4.
struct UnitPhase {
  int power = 0;

  static UnitPhase from_power(int k) { return {((k % 4) + 4) % 4}; }
  static UnitPhase from_sign(int s) { return from_power(s > 0 ? 0 : 2); }
  UnitPhase operator*(UnitPhase o) const { return from_power(power + o.power); }
  UnitPhase conj() const { return from_power(-power); }
  bool is_real() const noexcept { return power % 2 == 0; }
  /// +1 or -1; only meaningful when is_real().
  int real_sign() const noexcept { return power == 0 ? 1 : -1; }
  std::string label() const;

  friend bool operator==(const UnitPhase&, const UnitPhase&) = default;
};

/// (-i)^ell.
inline UnitPhase bochner_phase(int ell) { return UnitPhase::from_power(3 * ell); }

struct GaussianTerm {
  double c = 0.0;
  double a = 1.0;
  friend bool operator==(const GaussianTerm&, const GaussianTerm&) = default;
};

struct GaussianMixture {
  int d = 1;
  HarmonicFactor harmonic;
  std::vector<GaussianTerm> terms;

  friend bool operator==(const GaussianMixture&, const GaussianMixture&) = default;
};

/// Validates: a_j positive and pairwise distinct, some c_j non-zero, harmonic
/// realisable in R^d.
GaussianMixture make_mixture(int d, HarmonicFactor harmonic, std::vector<GaussianTerm> terms);

struct LaguerreFunction {
  int d = 1;
  HarmonicFactor harmonic;
  std::vector<double> coeffs;

  double alpha() const noexcept { return 0.5 * d + harmonic.ell - 1.0; }
  int degree() const;  // largest k with c_k != 0, or -1
  friend bool operator==(const LaguerreFunction&, const LaguerreFunction&) = default;
};

LaguerreFunction make_laguerre(int d, HarmonicFactor harmonic, std::vector<double> coeffs);

/// Eigenvalue of the index-k Laguerre basis function.
inline UnitPhase laguerre_eigenvalue(int ell, int k) { return UnitPhase::from_power(3 * ell + 2 * k); }

/// F[f] = phase * mixture.
struct PhasedMixture {
  UnitPhase phase;
  GaussianMixture mixture;
};

PhasedMixture fourier_transform(const GaussianMixture& f);

struct EigenStatus {
  bool is_eigen = false;
  std::optional<UnitPhase> eigenvalue;
};

/// Matches the transform against f term by term; `rel_tol` is applied to the
/// widths and the coefficients.
EigenStatus eigen_status(const GaussianMixture& f, double rel_tol = 1e-12);

/// f(delta x).
GaussianMixture dilate(const GaussianMixture& f, double delta);
GaussianMixture scale(const GaussianMixture& f, double factor);

// Explicit constructions. All of them read (d, ell, gamma) off the weight:
// ell is the degree of the weight's harmonic factor (which the constructed
// function shares) and gamma is the total homogeneity degree of P.

/// a0^{(d+ell+gamma)/2} + a0^{(ell-gamma)/2}.
double f0_amplitude(const Weight& w, double a0);

/// H (e^{-pi|x|^2/a0} + a0^{(d+2 ell)/2} e^{-a0 pi|x|^2} - A0 e^{-pi|x|^2}).
GaussianMixture build_f0(const Weight& w, double a0);

/// H (e^{-pi|x|^2/a} - a^{(d+2 ell)/2} e^{-a pi|x|^2}).
GaussianMixture build_g1(const Weight& w, double a1);

/// (a1^{e1} - a1^{e2}) / (b1^{e1} - b1^{e2}) with e1 = (d+ell+gamma)/2,
/// e2 = (ell-gamma)/2; the e1 = e2 limit is taken analytically.
double f1_amplitude(const Weight& w, double a1, double b1);

struct F1Family {
  GaussianMixture g1;
  GaussianMixture h1;
  GaussianMixture f1;
  double amplitude = 0.0;
};

F1Family build_g1_h1_f1(const Weight& w, double a1, double b1);

struct PsiPair {
  GaussianMixture psi;
  PhasedMixture transform;
  /// sqrt((d + ell + gamma) t log 2 / pi)
  double sign_change_radius = 0.0;
};

/// H (e^{-t pi|x|^2} - 2^{-(gamma-ell)/2} e^{-2t pi|x|^2}); requires gamma >= ell.
PsiPair build_psi_t(const Weight& w, double t);

double weighted_integral(const GaussianMixture& f, const Weight& w);
double weighted_integral(const LaguerreFunction& f, const Weight& w);

double evaluate_radial_profile(const GaussianMixture& f, double r);
double evaluate_radial_profile(const LaguerreFunction& f, double r);
double evaluate_function(const GaussianMixture& f, std::span<const double> x);
double evaluate_function(const LaguerreFunction& f, std::span<const double> x);

}  // namespace sul
