#include "sul/shift.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "sul/specialfn.hpp"

namespace sul {

std::string_view to_string(ShiftDirection dir) { return dir == ShiftDirection::Drop ? "drop" : "lift"; }

int shift_sign_exponent(int ell) {
  if (ell < 0) throw std::invalid_argument("shift degree must be non-negative");
  return (ell % 2 + ell) / 2;
}

int shifted_sign(int s, int ell) {
  if (s != 1 && s != -1) throw std::invalid_argument("s must be +1 or -1");
  return (shift_sign_exponent(ell) % 2 == 0) ? s : -s;
}

ShiftRecord drop_record(int source_dim, int ell, int s) {
  if (source_dim - 2 * ell < 1) throw std::invalid_argument("drop: target dimension must be positive");
  return {source_dim, source_dim - 2 * ell, ell, s, shifted_sign(s, ell), ShiftDirection::Drop};
}

ShiftRecord lift_record(int source_dim, int ell, int s_prime) {
  return {source_dim, source_dim + 2 * ell, ell, s_prime, shifted_sign(s_prime, ell), ShiftDirection::Lift};
}

namespace {

int checked_target(int d_source, const HarmonicFactor& f_h, const HarmonicFactor& h) {
  if (f_h.kind != HarmonicKind::One) throw std::invalid_argument("drop: source function must be radial");
  const int d = d_source - 2 * h.ell;
  if (d < 1) throw std::invalid_argument("drop: target dimension must be positive");
  h.validate(d);
  return d;
}

}  // namespace

GaussianMixture drop(const GaussianMixture& f, const HarmonicFactor& h) {
  const int d = checked_target(f.d, f.harmonic, h);
  return make_mixture(d, h, f.terms);
}

LaguerreFunction drop(const LaguerreFunction& f, const HarmonicFactor& h) {
  const int d = checked_target(f.d, f.harmonic, h);
  // alpha = (d + 2l)/2 - 1 = d/2 + l - 1, so the coefficients carry over.
  return make_laguerre(d, h, f.coeffs);
}

GaussianMixture lift(const GaussianMixture& f) {
  if (f.harmonic.kind != HarmonicKind::CoordinateProduct) {
    throw std::invalid_argument("lift: needs a COORDINATE_PRODUCT harmonic factor");
  }
  return make_mixture(f.d + 2 * f.harmonic.ell, HarmonicFactor::one(), f.terms);
}

Weight drop_weight(const Weight& radial, const HarmonicFactor& h, bool sign_wrap) {
  if (!radial.is_radial() || radial.sign_wrap) throw std::invalid_argument("drop_weight: source weight must be radial");
  const int d = radial.d - 2 * h.ell;
  if (d < 1) throw std::invalid_argument("drop_weight: target dimension must be positive");
  if (sign_wrap) return make_weight(d, h, radial.gamma_r + h.ell, true);
  return make_weight(d, h, radial.gamma_r, false);
}

Weight lift_weight(const Weight& w) {
  if (w.harmonic.kind != HarmonicKind::CoordinateProduct || w.sign_wrap) {
    throw std::invalid_argument("lift_weight: needs x_1...x_l |x|^gamma");
  }
  return power_weight(w.d + 2 * w.harmonic.ell, w.gamma_r);
}

double transport_factor(int ell) { return std::pow(2.0 * kPi, ell); }

int axis_parity(const HarmonicFactor& h, int axis) {
  if (axis < 0) throw std::invalid_argument("axis must be non-negative");
  switch (h.kind) {
    case HarmonicKind::One:
      return 1;
    case HarmonicKind::CoordinateProduct:
      return axis < h.ell ? -1 : 1;
    case HarmonicKind::PlaneHarmonic:
      // Re((-x1 + i x2)^l) = (-1)^l Re((x1 + i x2)^l); x2 -> -x2 conjugates.
      return (axis == 0 && h.ell % 2 == 1) ? -1 : 1;
  }
  return 1;
}

SymmetrizeResult symmetrize_odd(const GaussianMixture& f, int axis) {
  if (axis >= f.d) throw std::invalid_argument("symmetrize_odd: axis out of range");
  if (axis_parity(f.harmonic, axis) == 1) return {true, GaussianMixture{f.d, f.harmonic, {}}};
  return {false, scale(f, 2.0)};
}

bool has_coordinate_parity(const GaussianMixture& f) {
  const int ell = f.harmonic.kind == HarmonicKind::PlaneHarmonic ? -1 : f.harmonic.ell;
  if (ell < 0) return false;
  std::vector<double> x(f.d);
  for (int k = 0; k < f.d; ++k) x[k] = 0.31 + 0.17 * k;
  const double base = evaluate_function(f, x);
  if (base == 0.0) return false;
  for (int k = 0; k < f.d; ++k) {
    std::vector<double> y = x;
    y[k] = -y[k];
    const double expect = (k < ell ? -1.0 : 1.0) * base;
    if (std::abs(evaluate_function(f, y) - expect) > 1e-14 * std::abs(base)) return false;
  }
  return true;
}

RadializeInfo radialize_check(const GaussianMixture& f) {
  const bool radial = f.harmonic.kind == HarmonicKind::One;
  return {radial, !radial};
}

}  // namespace sul
