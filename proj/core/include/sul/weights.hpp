#pragma once

// The weight P(x) = [sgn] H(x) * |x|^{gamma_r} and its structural metadata.

#include <span>
#include <string>
#include <string_view>

namespace sul {

enum class HarmonicKind {
  One,                // H = 1
  CoordinateProduct,  // H = x_1 x_2 ... x_ell
  PlaneHarmonic,      // H = Re((x_1 + i x_2)^ell)
};

std::string_view to_string(HarmonicKind kind);
HarmonicKind harmonic_kind_from_string(std::string_view name);

struct HarmonicFactor {
  HarmonicKind kind = HarmonicKind::One;
  int ell = 0;

  static HarmonicFactor one() { return {HarmonicKind::One, 0}; }
  static HarmonicFactor coordinate_product(int ell) { return {HarmonicKind::CoordinateProduct, ell}; }
  static HarmonicFactor plane(int ell) { return {HarmonicKind::PlaneHarmonic, ell}; }

  /// Throws std::invalid_argument when the factor is not realisable in R^d.
  void validate(int d) const;
  double evaluate(std::span<const double> x) const;
  /// ell mod 2.
  int parity() const noexcept { return ell % 2; }

  friend bool operator==(const HarmonicFactor&, const HarmonicFactor&) = default;
};

/// P(x) = H(x) |x|^{gamma_r}, or sgn(H(x)) |x|^{gamma_r} when sign_wrap is set.
/// Construct through make_weight(), which enforces gamma_tot > -d.
struct Weight {
  int d = 1;
  HarmonicFactor harmonic;
  double gamma_r = 0.0;
  bool sign_wrap = false;

  /// Total homogeneity degree of P.
  double gamma_total() const noexcept { return gamma_r + (sign_wrap ? 0.0 : harmonic.ell); }
  bool is_radial() const noexcept { return harmonic.kind == HarmonicKind::One; }

  friend bool operator==(const Weight&, const Weight&) = default;
};

Weight make_weight(int d, HarmonicFactor harmonic, double gamma_r, bool sign_wrap = false);
/// |x|^gamma in R^d.
Weight power_weight(int d, double gamma);

/// P(x). Returns NaN at the origin when gamma_r < 0. Throws on dimension mismatch.
double evaluate(const Weight& w, std::span<const double> x);

/// The r in P(-x) = (-1)^r P(x).
int parity(const Weight& w);

/// |{x : |P(x)| <= lambda}|. Returns +inf for unbounded sub-level sets and 0
/// for empty ones. Throws std::domain_error when gamma_tot < 0.
double sublevel_volume(const Weight& w, double lambda);

/// int_{S^{d-1}} H(omega)^2 d sigma(omega), closed form.
double sphere_moment(const Weight& w);

/// int_{S^{d-1}} P(omega) H_f(omega) d sigma for a function whose harmonic
/// factor is `f_harmonic`. This is the angular part of int P f. Throws
/// std::invalid_argument if P f does not factor as (non-negative angular) x
/// (radial), i.e. if the two harmonic factors are incompatible.
double angular_factor(const Weight& w, const HarmonicFactor& f_harmonic);

/// Essential supremum of |P| on the unit ball (finite only for gamma_tot >= 0).
double sup_on_unit_ball(const Weight& w);

/// Essential infimum of |P| over the unit sphere.
double ess_inf_on_sphere(const Weight& w);

std::string describe(const Weight& w);

}  // namespace sul
