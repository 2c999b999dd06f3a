#include "sul/reps.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "sul/specialfn.hpp"

namespace sul {

namespace {

double norm2(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return std::sqrt(s);
}

bool close_rel(double x, double y, double tol) {
  return std::abs(x - y) <= tol * std::max(std::abs(x), std::abs(y));
}

// int_0^inf r^{m-1} e^{-a pi r^2} dr
double gaussian_moment(double a, double m) {
  return 0.5 * std::exp(log_gamma(0.5 * m) - 0.5 * m * std::log(a * kPi));
}

double integrability_exponent(int d, const HarmonicFactor& h, const Weight& w) {
  if (w.d != d) throw std::invalid_argument("weighted_integral: weight and function dimensions differ");
  const double m = d + h.ell + w.gamma_total();
  if (!(m > 0.0)) throw std::domain_error("weighted_integral: integrand is not integrable at the origin");
  return m;
}

}  // namespace

std::string UnitPhase::label() const {
  switch (power) {
    case 0:
      return "1";
    case 1:
      return "i";
    case 2:
      return "-1";
    default:
      return "-i";
  }
}

GaussianMixture make_mixture(int d, HarmonicFactor harmonic, std::vector<GaussianTerm> terms) {
  if (d < 1) throw std::invalid_argument("mixture dimension must be positive");
  harmonic.validate(d);
  bool any = false;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& t = terms[i];
    if (!(t.a > 0.0) || !std::isfinite(t.a)) throw std::invalid_argument("mixture widths must be positive");
    if (!std::isfinite(t.c)) throw std::invalid_argument("mixture coefficients must be finite");
    if (t.c != 0.0) any = true;
    for (std::size_t j = 0; j < i; ++j) {
      if (terms[j].a == t.a) throw std::invalid_argument("mixture widths must be distinct");
    }
  }
  if (!any) throw std::invalid_argument("mixture must have a non-zero coefficient");
  return {d, harmonic, std::move(terms)};
}

int LaguerreFunction::degree() const {
  for (int k = static_cast<int>(coeffs.size()) - 1; k >= 0; --k) {
    if (coeffs[k] != 0.0) return k;
  }
  return -1;
}

LaguerreFunction make_laguerre(int d, HarmonicFactor harmonic, std::vector<double> coeffs) {
  if (d < 1) throw std::invalid_argument("function dimension must be positive");
  harmonic.validate(d);
  for (double c : coeffs) {
    if (!std::isfinite(c)) throw std::invalid_argument("Laguerre coefficients must be finite");
  }
  return {d, harmonic, std::move(coeffs)};
}

PhasedMixture fourier_transform(const GaussianMixture& f) {
  const double e = 0.5 * (f.d + 2.0 * f.harmonic.ell);
  GaussianMixture out{f.d, f.harmonic, {}};
  out.terms.reserve(f.terms.size());
  for (const auto& t : f.terms) out.terms.push_back({t.c * std::pow(t.a, -e), 1.0 / t.a});
  return {bochner_phase(f.harmonic.ell), std::move(out)};
}

EigenStatus eigen_status(const GaussianMixture& f, double rel_tol) {
  const PhasedMixture ft = fourier_transform(f);
  std::vector<GaussianTerm> src;
  std::vector<GaussianTerm> img;
  for (const auto& t : f.terms) {
    if (t.c != 0.0) src.push_back(t);
  }
  for (const auto& t : ft.mixture.terms) {
    if (t.c != 0.0) img.push_back(t);
  }
  if (src.size() != img.size() || src.empty()) return {};

  int sign = 0;
  std::vector<bool> used(img.size(), false);
  for (const auto& t : src) {
    bool matched = false;
    for (std::size_t j = 0; j < img.size(); ++j) {
      if (used[j] || !close_rel(t.a, img[j].a, rel_tol)) continue;
      int s = 0;
      if (close_rel(t.c, img[j].c, rel_tol)) {
        s = 1;
      } else if (close_rel(t.c, -img[j].c, rel_tol)) {
        s = -1;
      } else {
        return {};
      }
      if (sign != 0 && s != sign) return {};
      sign = s;
      used[j] = true;
      matched = true;
      break;
    }
    if (!matched) return {};
  }
  return {true, ft.phase * UnitPhase::from_sign(sign)};
}

GaussianMixture dilate(const GaussianMixture& f, double delta) {
  if (!(delta > 0.0)) throw std::invalid_argument("dilate: delta must be positive");
  GaussianMixture out = f;
  const double h = std::pow(delta, f.harmonic.ell);
  for (auto& t : out.terms) {
    t.c *= h;
    t.a *= delta * delta;
  }
  return out;
}

GaussianMixture scale(const GaussianMixture& f, double factor) {
  GaussianMixture out = f;
  for (auto& t : out.terms) t.c *= factor;
  return out;
}

double f0_amplitude(const Weight& w, double a0) {
  const double ell = w.harmonic.ell;
  const double g = w.gamma_total();
  return std::pow(a0, 0.5 * (w.d + ell + g)) + std::pow(a0, 0.5 * (ell - g));
}

GaussianMixture build_f0(const Weight& w, double a0) {
  if (!(a0 > 1.0)) throw std::invalid_argument("build_f0: a0 must exceed 1");
  const double e = 0.5 * (w.d + 2.0 * w.harmonic.ell);
  return make_mixture(w.d, w.harmonic,
                      {{1.0, 1.0 / a0}, {std::pow(a0, e), a0}, {-f0_amplitude(w, a0), 1.0}});
}

GaussianMixture build_g1(const Weight& w, double a1) {
  if (!(a1 > 1.0)) throw std::invalid_argument("build_g1: a1 must exceed 1");
  const double e = 0.5 * (w.d + 2.0 * w.harmonic.ell);
  return make_mixture(w.d, w.harmonic, {{1.0, 1.0 / a1}, {-std::pow(a1, e), a1}});
}

double f1_amplitude(const Weight& w, double a1, double b1) {
  const double ell = w.harmonic.ell;
  const double g = w.gamma_total();
  const double e1 = 0.5 * (w.d + ell + g);
  const double e2 = 0.5 * (ell - g);
  const double la = std::log(a1);
  const double lb = std::log(b1);
  // a^{e1} - a^{e2} = a^{e2} expm1((e1 - e2) log a)
  const double ratio = (e1 == e2) ? la / lb : std::expm1((e1 - e2) * la) / std::expm1((e1 - e2) * lb);
  return std::pow(a1 / b1, e2) * ratio;
}

F1Family build_g1_h1_f1(const Weight& w, double a1, double b1) {
  if (!(b1 > 1.0 && a1 > b1)) throw std::invalid_argument("build_g1_h1_f1: need 1 < b1 < a1");
  F1Family out;
  out.g1 = build_g1(w, a1);
  out.h1 = build_g1(w, b1);
  out.amplitude = f1_amplitude(w, a1, b1);
  std::vector<GaussianTerm> terms = out.g1.terms;
  for (const auto& t : out.h1.terms) terms.push_back({-out.amplitude * t.c, t.a});
  out.f1 = make_mixture(w.d, w.harmonic, std::move(terms));
  return out;
}

PsiPair build_psi_t(const Weight& w, double t) {
  if (!(t > 0.0)) throw std::invalid_argument("build_psi_t: t must be positive");
  const double ell = w.harmonic.ell;
  const double g = w.gamma_total();
  if (g < ell) throw std::invalid_argument("build_psi_t: requires gamma >= ell");
  PsiPair out;
  out.psi = make_mixture(w.d, w.harmonic, {{1.0, t}, {-std::pow(2.0, -0.5 * (g - ell)), 2.0 * t}});
  out.transform = fourier_transform(out.psi);
  out.sign_change_radius = std::sqrt((w.d + ell + g) * t * std::log(2.0) / kPi);
  return out;
}

double weighted_integral(const GaussianMixture& f, const Weight& w) {
  const double m = integrability_exponent(f.d, f.harmonic, w);
  const double ang = angular_factor(w, f.harmonic);
  if (ang == 0.0) return 0.0;
  double radial = 0.0;
  for (const auto& t : f.terms) radial += t.c * gaussian_moment(t.a, m);
  return ang * radial;
}

double weighted_integral(const LaguerreFunction& f, const Weight& w) {
  const double m = integrability_exponent(f.d, f.harmonic, w);
  const double ang = angular_factor(w, f.harmonic);
  const int deg = f.degree();
  if (ang == 0.0 || deg < 0) return 0.0;
  // With v = pi r^2 the radial integral is (1/2) pi^{-m/2} int p(2v) v^{m/2-1} e^{-v} dv.
  const double beta = 0.5 * m - 1.0;
  const QuadratureRule rule = gauss_laguerre_rule(deg / 2 + 2, beta);
  const double alpha = f.alpha();
  double acc = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const std::vector<double> lk = laguerre_all(deg, alpha, 2.0 * rule.nodes[i]);
    double p = 0.0;
    for (int k = 0; k <= deg; ++k) p += f.coeffs[k] * lk[k];
    acc += rule.weights[i] * p;
  }
  return ang * 0.5 * std::pow(kPi, -0.5 * m) * acc;
}

double evaluate_radial_profile(const GaussianMixture& f, double r) {
  double s = 0.0;
  for (const auto& t : f.terms) s += t.c * std::exp(-t.a * kPi * r * r);
  return s;
}

double evaluate_radial_profile(const LaguerreFunction& f, double r) {
  const int deg = f.degree();
  if (deg < 0) return 0.0;
  const double u = 2.0 * kPi * r * r;
  const std::vector<double> lk = laguerre_all(deg, f.alpha(), u);
  double p = 0.0;
  for (int k = 0; k <= deg; ++k) p += f.coeffs[k] * lk[k];
  return p * std::exp(-0.5 * u);
}

double evaluate_function(const GaussianMixture& f, std::span<const double> x) {
  if (static_cast<int>(x.size()) != f.d) throw std::invalid_argument("evaluate_function: dimension mismatch");
  return f.harmonic.evaluate(x) * evaluate_radial_profile(f, norm2(x));
}

double evaluate_function(const LaguerreFunction& f, std::span<const double> x) {
  if (static_cast<int>(x.size()) != f.d) throw std::invalid_argument("evaluate_function: dimension mismatch");
  return f.harmonic.evaluate(x) * evaluate_radial_profile(f, norm2(x));
}

}  // namespace sul
