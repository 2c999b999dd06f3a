#include "sul/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <stdexcept>

#include "sul/shift.hpp"
#include "sul/specialfn.hpp"

namespace sul {

namespace {

void check_sign(int s) {
  if (s != 1 && s != -1) throw std::invalid_argument("s must be +1 or -1");
}

}  // namespace

int regime_sign(int s, const Weight& w) {
  check_sign(s);
  const int e = w.harmonic.ell + parity(w);
  if (e % 2 != 0) throw std::invalid_argument("harmonic degree and parity disagree");
  return ((e / 2) % 2 == 0) ? s : -s;
}

Thm1Result thm1_upper(int s, const Weight& w) {
  const int sigma = regime_sign(s, w);
  const double d = w.d;
  const double ell = w.harmonic.ell;
  const double g = w.gamma_total();
  Thm1Result out;
  out.rho = std::max(d + ell + g, ell - g);

  if (sigma == 1) {
    out.regime = "f0";
    out.a = 1.0 + 1.0 / std::sqrt(out.rho);
    out.amplitude = f0_amplitude(w, out.a);
    out.witness = build_f0(w, out.a);
    out.analytic = std::sqrt(out.a * std::log(out.amplitude) / (kPi * (out.a - 1.0)));
    out.numeric = last_sign_change(out.witness, w).value();
    return out;
  }

  if (g <= -0.5 * d) {
    out.regime = "g1_vanishing";
    out.analytic = 0.0;
    for (double a1 : {10.0, 100.0, 1000.0}) {
      const GaussianMixture g1 = build_g1(w, a1);
      out.vanishing.emplace_back(a1, last_sign_change(g1, w).value());
      out.witness = g1;
      out.a = a1;
    }
    out.numeric = out.vanishing.back().second;
    return out;
  }

  out.regime = "f1";
  const double alpha = 1.0 / std::sqrt(out.rho);
  const double a1 = 1.0 + 2.0 * alpha;
  const double b1 = 1.0 + alpha;
  const F1Family fam = build_g1_h1_f1(w, a1, b1);
  out.a = a1;
  out.b = b1;
  out.amplitude = fam.amplitude;
  out.witness = fam.f1;
  // a1^{(d+2l)/2} e^{-a1 pi r^2} <= e^{-pi r^2 / a1} / 2 beyond r1.
  out.r1 = std::sqrt((std::log(2.0) + 0.5 * (d + 2.0 * ell) * std::log(a1)) / (kPi * (a1 - 1.0 / a1)));
  out.r2 = std::sqrt(std::log(2.0 * fam.amplitude) / kPi * a1 * b1 / (a1 - b1));
  out.analytic = std::max(out.r1, out.r2);
  out.numeric = last_sign_change(out.witness, w).value();
  return out;
}

double thm2_constant(const Weight& w) {
  const double g = w.gamma_total();
  if (g < 0.0) throw std::domain_error("thm2_constant: negative homogeneity degree is unsupported");
  if (g == 0.0) {
    const double m = ess_inf_on_sphere(w);
    if (!(m > 0.0)) throw std::domain_error("thm2_constant: sub-level sets have infinite measure");
    return 1.0 / m;
  }
  const double a1 = sublevel_volume(w, 1.0);
  if (!std::isfinite(a1)) throw std::domain_error("thm2_constant: sub-level sets have infinite measure");
  const double d = w.d;
  return (1.0 + g / d) * std::pow((1.0 + d / g) * a1, g / d);
}

double thm3_lower(const Weight& w, double q, double K, double C) {
  if (!(q >= 1.0)) throw std::invalid_argument("thm3_lower: q must lie in [1, inf]");
  if (!(K > 0.0) || !std::isfinite(K)) throw std::invalid_argument("thm3_lower: K must be positive and finite");
  if (!(C > 0.0) || !std::isfinite(C)) throw std::invalid_argument("thm3_lower: C must be positive and finite");
  const double g = w.gamma_total();
  if (g < 0.0) throw std::domain_error("thm3_lower: negative homogeneity degree is unsupported");
  const double d = w.d;
  if (q == 1.0) {
    if (g == 0.0) throw std::domain_error("thm3_lower: q = 1 needs a positive homogeneity degree");
    return std::pow(2.0 * K * C, -1.0 / g);
  }
  const double qp = std::isinf(q) ? 1.0 : q / (q - 1.0);
  const double e = d + g * qp;
  const double log_val = std::log(e) + log_gamma(0.5 * d) - std::log(2.0) - 0.5 * d * std::log(kPi) -
                         qp * std::log(2.0 * K * C);
  return std::exp(log_val / e);
}

double bck_lower(int d) {
  if (d < 1) throw std::invalid_argument("bck_lower: dimension must be positive");
  return std::exp((log_gamma(0.5 * d + 1.0) - std::log(2.0)) / d) / std::sqrt(kPi);
}

double power_window(int d) {
  if (d < 1) throw std::invalid_argument("power_window: dimension must be positive");
  if (d % 2 == 0) return 1.0;
  if (d == 1 || d == 3) return 0.5;
  return 1.5;
}

double power_lower_explicit(int d, double gamma) {
  if (d < 1) throw std::invalid_argument("power_lower_explicit: dimension must be positive");
  if (gamma < 0.0) throw std::domain_error("power_lower_explicit: gamma must be non-negative");
  if (gamma == 0.0) return bck_lower(d);
  const double dd = d;
  const double log_ball = (log_gamma(0.5 * dd + 1.0) - 0.5 * dd * std::log(kPi)) / dd;
  const double log_val = log_ball - std::log(2.0) / (dd + gamma) +
                         gamma / (dd * (dd + gamma)) * std::log(gamma / (dd + gamma));
  return std::exp(log_val);
}

double power_lower_floor(int d) {
  if (d < 1) throw std::invalid_argument("power_lower_floor: dimension must be positive");
  const double dd = d;
  const double log_val =
      log_gamma(0.5 * dd + 1.0) - std::log(2.0) - 0.5 * dd * std::log(kPi) - 1.0 / (2.0 * std::exp(1.0));
  return std::exp(log_val / dd);
}

double power_floor_dimension(int d, double gamma) {
  const double a = d;
  const double b = std::abs(d + 2.0 * std::floor(gamma));
  const double c = std::abs(-d + 2.0 * std::floor(-gamma));
  return std::min({a, b, c});
}

BoundReport corollary_power(int s, int d, double gamma) {
  check_sign(s);
  if (d < 1) throw std::invalid_argument("corollary_power: dimension must be positive");
  if (!(gamma > -d)) throw std::invalid_argument("corollary_power: gamma must exceed -d");
  BoundReport rep;
  rep.s = s;
  rep.weight = power_weight(d, gamma);
  if (gamma == 0.0) rep.sharp = sharp_constant(s, d, 0);

  const Thm1Result up = thm1_upper(s, rep.weight);
  rep.upper_analytic = up.analytic;
  rep.upper_numeric = up.numeric;
  rep.upper_method = "thm1_" + up.regime;

  const double dd = d;
  const double eps = power_window(d);

  // Lower bound for gamma_eff in [-d/2 + eps, 0) after a shift.
  auto shifted = [&](double g, const std::string& tag) {
    int ell = 0;
    HarmonicFactor h;
    if (d == 3) {
      ell = 1;
      h = HarmonicFactor::coordinate_product(1);
    } else {
      ell = -static_cast<int>(std::floor(g));
      h = HarmonicFactor::plane(ell);
    }
    const int d2 = d - 2 * ell;
    const double g2 = g + ell;
    rep.shift_ell = ell;
    rep.shifted_dim = d2;
    rep.shifted_gamma = g2;
    rep.shifted_sign = shifted_sign(s, ell);
    rep.lower = power_lower_explicit(d2, g2);
    rep.lower_floor = power_lower_floor(d2);
    rep.lower_method = tag + (h.kind == HarmonicKind::CoordinateProduct ? "_shift_coordinate" : "_shift_plane");
  };

  if (gamma >= 0.0) {
    rep.lower = power_lower_explicit(d, gamma);
    rep.lower_floor = power_lower_floor(d);
    rep.lower_method = gamma == 0.0 ? "bck" : "power_explicit";
  } else if (s == -1 && gamma <= -0.5 * dd) {
    rep.lower = 0.0;
    rep.lower_method = "vanishing";
    rep.upper_analytic = 0.0;
  } else if (gamma >= -0.5 * dd + eps) {
    shifted(gamma, "power");
  } else if (s == 1 && gamma <= -0.5 * dd - eps) {
    shifted(-dd - gamma, "riesz_reflect");
    rep.note = "reflected gamma -> -d - gamma";
  } else {
    rep.lower_method = "open";
    rep.note = "gamma lies in the uncovered window around -d/2";
  }
  return rep;
}

const std::vector<SharpEntry>& sharp_table() {
  static const std::vector<SharpEntry> table = [] {
    std::vector<SharpEntry> t;
    t.push_back({1, 0, 1, -1, 1.0});
    const double r2 = std::sqrt(2.0);
    struct Line {
      int base;
      int max_ell;
      int shift;  // exponent offset: (r + ell + shift) / 2
      double value;
    };
    for (const Line& ln : {Line{8, 2, 2, r2}, Line{12, 4, 0, r2}, Line{24, 8, 2, 2.0}}) {
      for (int ell = 0; ell <= ln.max_ell; ++ell) {
        const int e = (ell % 2 + ell + ln.shift) / 2;
        t.push_back({ln.base, ell, ln.base - 2 * ell, (e % 2 == 0) ? 1 : -1, ln.value});
      }
    }
    return t;
  }();
  return table;
}

std::optional<double> sharp_constant(int s, int d, int ell) {
  for (const auto& e : sharp_table()) {
    if (e.s == s && e.d == d && e.ell == ell) return e.value;
  }
  return std::nullopt;
}

// ---- oscillating bump ----------------------------------------------------

namespace {

const LegendreRule& cached_legendre(int n) {
  static std::mutex mu;
  static std::map<int, LegendreRule> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, gauss_legendre_rule(n)).first;
  return it->second;
}

class BumpPair {
 public:
  explicit BumpPair(double delta) : delta_(delta) {}

  double g(double x) const {
    const double u = x / delta_;
    if (std::abs(u) >= 1.0) return 0.0;
    const double v = 1.0 - u * u;
    return v * v * v;
  }

  // F[g](xi) = delta int_{-1}^{1} (1 - s^2)^3 cos(2 pi delta xi s) ds
  double ghat(double xi) const {
    const double w = 2.0 * kPi * delta_ * std::abs(xi);
    const int need = 24 + static_cast<int>(std::ceil(0.75 * w));
    int n = 32;
    while (n < need) n = (n * 5 / 4 + 7) / 8 * 8;
    const LegendreRule& rule = cached_legendre(n);
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      const double s = rule.nodes[i];
      const double v = 1.0 - s * s;
      acc += rule.weights[i] * v * v * v * std::cos(w * s);
    }
    return delta_ * acc;
  }

  double delta() const { return delta_; }

 private:
  double delta_;
};

struct OscillatingPair {
  const BumpPair& bump;
  double t;

  double f(double x) const {
    const double h = bump.g(x) * std::cos(2.0 * kPi * t * x);
    const double hh = 0.5 * (bump.ghat(x - t) + bump.ghat(x + t));
    return h + hh;
  }
};

// int_0^b phi(x) x^beta dx with an algebraic end-point substitution on [0, x1]
// and composite 16-point panels of width <= `panel` on [x1, b].
template <class Fn>
double singular_integral(Fn phi, double beta, double x1, double b, double panel) {
  const LegendreRule& rule = cached_legendre(32);
  double acc = 0.0;
  // x = x1 s^{1/(1+beta)}: x^beta dx = x1^{1+beta} / (1 + beta) ds
  const double p = 1.0 / (1.0 + beta);
  double inner = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double s = 0.5 * (rule.nodes[i] + 1.0);
    inner += 0.5 * rule.weights[i] * phi(x1 * std::pow(s, p));
  }
  acc += std::pow(x1, 1.0 + beta) * p * inner;
  if (b > x1) {
    const LegendreRule& r16 = cached_legendre(16);
    const int panels = std::max(1, static_cast<int>(std::ceil((b - x1) / panel)));
    const double h = (b - x1) / panels;
    for (int k = 0; k < panels; ++k) {
      const double lo = x1 + k * h;
      for (std::size_t i = 0; i < r16.nodes.size(); ++i) {
        const double x = lo + 0.5 * h * (r16.nodes[i] + 1.0);
        acc += 0.5 * h * r16.weights[i] * phi(x) * std::pow(x, beta);
      }
    }
  }
  return acc;
}

}  // namespace

double bump_weighted_l1(double delta, double gamma) {
  if (!(delta > 0.0)) throw std::invalid_argument("bump_weighted_l1: delta must be positive");
  if (!(gamma > -1.0)) throw std::invalid_argument("bump_weighted_l1: gamma must exceed -1");
  // 2 delta^{1+gamma} int_0^1 (1 - s^2)^3 s^gamma ds = delta^{1+gamma} B((1+gamma)/2, 4)
  const double a = 0.5 * (1.0 + gamma);
  return std::pow(delta, 1.0 + gamma) * std::exp(log_gamma(a) + log_gamma(4.0) - log_gamma(a + 4.0));
}

NazarovReport nazarov_demo(double delta, double alpha, double gamma, double q, const std::vector<double>& ts) {
  if (!(delta > 0.0)) throw std::invalid_argument("nazarov_demo: delta must be positive");
  if (!(gamma > -1.0 && gamma < 0.0)) throw std::invalid_argument("nazarov_demo: need -1 < gamma < 0");
  if (!(q > 1.0) || !std::isfinite(q)) throw std::invalid_argument("nazarov_demo: need 1 < q < inf");
  if (!(alpha > -1.0 / q)) throw std::invalid_argument("nazarov_demo: need alpha > -1/q");
  for (double t : ts) {
    if (!(t > 0.0)) throw std::invalid_argument("nazarov_demo: frequencies must be positive");
  }

  NazarovReport rep;
  rep.delta = delta;
  rep.alpha = alpha;
  rep.gamma = gamma;
  rep.q = q;
  const double qp = q / (q - 1.0);
  rep.counterexample_regime = alpha < gamma + 1.0 / qp;

  const BumpPair bump(delta);
  for (double t : ts) {
    const OscillatingPair ft{bump, t};
    const double x1 = std::min(delta, 0.25 / t);
    const double panel = std::min(0.25 / t, delta / 8.0);

    // f_t is even, so both norms are twice the half-line integrals.
    auto pow_q = [&](double x) { return std::pow(std::abs(ft.f(x)), q); };
    const double num_q = 2.0 * singular_integral(pow_q, alpha * q, x1, delta, panel);

    auto absf = [&](double x) { return std::abs(ft.f(x)); };
    double den = singular_integral(absf, gamma, x1, delta, panel);
    // Beyond delta only F[h_t] survives; it lives near x = t with width ~ 1/delta.
    const double x_far = 2.0 * t + 200.0 / delta;
    const double far_panel = 0.25 / delta;
    const LegendreRule& r16 = cached_legendre(16);
    const int panels = static_cast<int>(std::ceil((x_far - delta) / far_panel));
    const double h = (x_far - delta) / panels;
    for (int k = 0; k < panels; ++k) {
      const double lo = delta + k * h;
      for (std::size_t i = 0; i < r16.nodes.size(); ++i) {
        const double x = lo + 0.5 * h * (r16.nodes[i] + 1.0);
        den += 0.5 * h * r16.weights[i] * std::abs(ft.f(x)) * std::pow(x, gamma);
      }
    }
    den *= 2.0;

    NazarovPoint pt;
    pt.t = t;
    pt.numerator = std::pow(num_q, 1.0 / q);
    pt.denominator = den;
    pt.ratio = pt.numerator / pt.denominator;
    rep.points.push_back(pt);
  }
  rep.increasing = true;
  for (std::size_t i = 1; i < rep.points.size(); ++i) {
    if (!(rep.points[i].ratio > rep.points[i - 1].ratio)) rep.increasing = false;
  }
  return rep;
}

}  // namespace sul
