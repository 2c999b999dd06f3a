#include "sul/weights.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "sul/specialfn.hpp"

namespace sul {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double norm2(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return std::sqrt(s);
}

// int_0^{2 pi} |cos theta|^{-p} d theta, p < 1.
double circle_abs_cos_power(double p) {
  return 2.0 * std::exp(log_gamma(0.5 * (1.0 - p)) + 0.5 * std::log(kPi) - log_gamma(1.0 - 0.5 * p));
}

// int_{S^{d-1}} rho^c d sigma with rho = |(omega_1, omega_2)|, c > -2.
double sphere_plane_radius_power(int d, double c) {
  return 2.0 * std::exp(0.5 * d * std::log(kPi) + log_gamma(0.5 * (c + 2.0)) - log_gamma(0.5 * (c + d)));
}

// int_{S^{d-1}} |P(omega)|^{-p} d sigma, +inf when divergent.
double sphere_inverse_power(const Weight& w, double p) {
  const int d = w.d;
  const int ell = w.harmonic.ell;
  if (w.sign_wrap || w.harmonic.kind == HarmonicKind::One) return sphere_area(d);
  if (w.harmonic.kind == HarmonicKind::CoordinateProduct) {
    if (p >= 1.0) return kInf;
    const double log_val = ell * log_gamma(0.5 * (1.0 - p)) + 0.5 * (d - ell) * std::log(kPi) -
                           log_gamma(0.5 * (ell * (1.0 - p) + d - ell));
    return 2.0 * std::exp(log_val);
  }
  // Plane harmonic: rho^ell |cos(ell theta)|.
  if (p >= 1.0) return kInf;
  const double c = -p * ell;
  if (d > 2 && c <= -2.0) return kInf;
  const double radial = (d == 2) ? 2.0 * kPi : sphere_plane_radius_power(d, c);
  return circle_abs_cos_power(p) * radial / (2.0 * kPi);
}

double sphere_abs_h(const Weight& w) {
  const int d = w.d;
  const int ell = w.harmonic.ell;
  switch (w.harmonic.kind) {
    case HarmonicKind::One:
      return sphere_area(d);
    case HarmonicKind::CoordinateProduct:
      return 2.0 * std::exp(0.5 * (d - ell) * std::log(kPi) - log_gamma(0.5 * (d + ell)));
    case HarmonicKind::PlaneHarmonic:
      return 4.0 * std::exp((0.5 * d - 1.0) * std::log(kPi) + log_gamma(0.5 * ell + 1.0) -
                            log_gamma(0.5 * (ell + d)));
  }
  return 0.0;
}

}  // namespace

std::string_view to_string(HarmonicKind kind) {
  switch (kind) {
    case HarmonicKind::One:
      return "ONE";
    case HarmonicKind::CoordinateProduct:
      return "COORDINATE_PRODUCT";
    case HarmonicKind::PlaneHarmonic:
      return "PLANE_HARMONIC";
  }
  return "ONE";
}

HarmonicKind harmonic_kind_from_string(std::string_view name) {
  if (name == "ONE") return HarmonicKind::One;
  if (name == "COORDINATE_PRODUCT") return HarmonicKind::CoordinateProduct;
  if (name == "PLANE_HARMONIC") return HarmonicKind::PlaneHarmonic;
  throw std::invalid_argument("unknown harmonic kind '" + std::string(name) + "'");
}

void HarmonicFactor::validate(int d) const {
  switch (kind) {
    case HarmonicKind::One:
      if (ell != 0) throw std::invalid_argument("harmonic ONE must have degree 0");
      break;
    case HarmonicKind::CoordinateProduct:
      if (ell < 1 || ell > d) {
        throw std::invalid_argument("COORDINATE_PRODUCT needs 1 <= ell <= d");
      }
      break;
    case HarmonicKind::PlaneHarmonic:
      if (ell < 1 || d < 2) throw std::invalid_argument("PLANE_HARMONIC needs ell >= 1 and d >= 2");
      break;
  }
}

double HarmonicFactor::evaluate(std::span<const double> x) const {
  switch (kind) {
    case HarmonicKind::One:
      return 1.0;
    case HarmonicKind::CoordinateProduct: {
      double p = 1.0;
      for (int i = 0; i < ell; ++i) p *= x[i];
      return p;
    }
    case HarmonicKind::PlaneHarmonic: {
      const std::complex<double> z(x[0], x[1]);
      std::complex<double> acc(1.0, 0.0);
      for (int i = 0; i < ell; ++i) acc *= z;
      return acc.real();
    }
  }
  return 0.0;
}

Weight make_weight(int d, HarmonicFactor harmonic, double gamma_r, bool sign_wrap) {
  if (d < 1) throw std::invalid_argument("weight dimension must be positive");
  harmonic.validate(d);
  if (!std::isfinite(gamma_r)) throw std::invalid_argument("gamma_r must be finite");
  Weight w{d, harmonic, gamma_r, sign_wrap};
  if (!(w.gamma_total() > -d)) {
    throw std::invalid_argument("weight homogeneity degree must exceed -d");
  }
  return w;
}

Weight power_weight(int d, double gamma) { return make_weight(d, HarmonicFactor::one(), gamma, false); }

double evaluate(const Weight& w, std::span<const double> x) {
  if (static_cast<int>(x.size()) != w.d) {
    throw std::invalid_argument("evaluate: point dimension does not match weight dimension");
  }
  const double r = norm2(x);
  if (r == 0.0 && w.gamma_r < 0.0) return std::numeric_limits<double>::quiet_NaN();
  double h = w.harmonic.evaluate(x);
  if (w.sign_wrap) h = (h > 0.0) ? 1.0 : (h < 0.0 ? -1.0 : 0.0);
  if (w.gamma_r == 0.0) return h;
  return h * std::pow(r, w.gamma_r);
}

int parity(const Weight& w) { return w.harmonic.parity(); }

double sublevel_volume(const Weight& w, double lambda) {
  const double g = w.gamma_total();
  if (g < 0.0) throw std::domain_error("sublevel_volume: unsupported for negative homogeneity");
  if (!(lambda > 0.0)) throw std::domain_error("sublevel_volume: lambda must be positive");
  if (g == 0.0) return lambda < ess_inf_on_sphere(w) ? 0.0 : kInf;
  const double a1 = sphere_inverse_power(w, w.d / g) / w.d;
  if (!std::isfinite(a1)) return kInf;
  return std::pow(lambda, w.d / g) * a1;
}

double sphere_moment(const Weight& w) {
  const int d = w.d;
  const int ell = w.harmonic.ell;
  switch (w.harmonic.kind) {
    case HarmonicKind::One:
      return sphere_area(d);
    case HarmonicKind::CoordinateProduct:
      // 2 Gamma(3/2)^ell pi^{(d-ell)/2} / Gamma(d/2 + ell)
      return 2.0 * std::exp(ell * log_gamma(1.5) + 0.5 * (d - ell) * std::log(kPi) - log_gamma(0.5 * d + ell));
    case HarmonicKind::PlaneHarmonic:
      // pi^{d/2} ell! / Gamma(ell + d/2)
      return std::exp(0.5 * d * std::log(kPi) + log_gamma(ell + 1.0) - log_gamma(ell + 0.5 * d));
  }
  return 0.0;
}

double angular_factor(const Weight& w, const HarmonicFactor& f_harmonic) {
  if (w.harmonic == f_harmonic) return w.sign_wrap ? sphere_abs_h(w) : sphere_moment(w);
  // A non-constant harmonic (or its sign) against a constant averages to zero.
  if (w.harmonic.kind == HarmonicKind::One || f_harmonic.kind == HarmonicKind::One) return 0.0;
  throw std::invalid_argument("angular_factor: weight and function carry different harmonic factors");
}

double sup_on_unit_ball(const Weight& w) {
  if (w.gamma_total() < 0.0) return kInf;
  if (w.sign_wrap || w.harmonic.kind != HarmonicKind::CoordinateProduct) return 1.0;
  const int ell = w.harmonic.ell;
  return std::pow(static_cast<double>(ell), -0.5 * ell);
}

double ess_inf_on_sphere(const Weight& w) {
  if (w.sign_wrap || w.harmonic.kind == HarmonicKind::One) return 1.0;
  return 0.0;
}

std::string describe(const Weight& w) {
  std::ostringstream os;
  os << "P(x) = ";
  if (w.sign_wrap) os << "sgn(";
  switch (w.harmonic.kind) {
    case HarmonicKind::One:
      os << "1";
      break;
    case HarmonicKind::CoordinateProduct:
      os << "x_1...x_" << w.harmonic.ell;
      break;
    case HarmonicKind::PlaneHarmonic:
      os << "Re((x_1 + i x_2)^" << w.harmonic.ell << ")";
      break;
  }
  if (w.sign_wrap) os << ")";
  os << " |x|^" << w.gamma_r << " in R^" << w.d;
  return os.str();
}

}  // namespace sul
