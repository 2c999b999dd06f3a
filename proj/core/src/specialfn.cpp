#include "sul/specialfn.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace sul {

namespace {

constexpr double kEulerGamma = 0.57721566490153286060651209008240243;
constexpr double kHalfLog2Pi = 0.91893853320467274178032973640561764;

// Godfrey's g = 607/128, n = 15 coefficient set.
constexpr double kLanczosG = 607.0 / 128.0;
constexpr std::array<double, 15> kLanczosCoeffs = {
    0.99999999999999709182,     57.156235665862923517,      -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978,    .33994649984811888699e-4,
    .46523628927048575665e-4,   -.98374475304879564677e-4,  .15808870322491248884e-3,
    -.21026444172410488319e-3,  .21743961811521264320e-3,   -.16431810653676389022e-3,
    .84418223983852743293e-4,   -.26190838401581408670e-4,  .36899182659531622704e-5,
};

double lanczos_log_gamma(double x) {
  const double z = x - 1.0;
  double sum = kLanczosCoeffs[0];
  for (std::size_t k = 1; k < kLanczosCoeffs.size(); ++k) {
    sum += kLanczosCoeffs[k] / (z + static_cast<double>(k));
  }
  const double t = z + kLanczosG + 0.5;
  return kHalfLog2Pi + (z + 0.5) * std::log(t) - t + std::log(sum);
}

// zeta(k) - 1 for integer k >= 2: direct sum plus an Euler-Maclaurin tail.
double zeta_minus_one(int k) {
  constexpr int kCut = 16;
  double s = 0.0;
  for (int n = kCut - 1; n >= 2; --n) s += std::pow(static_cast<double>(n), -k);
  const double N = kCut;
  double tail = std::pow(N, 1.0 - k) / (k - 1) + 0.5 * std::pow(N, -k);
  // B_{2j} / (2j)!
  constexpr std::array<double, 5> kB = {1.0 / 12.0, -1.0 / 720.0, 1.0 / 30240.0, -1.0 / 1209600.0,
                                        1.0 / 47900160.0};
  double rising = k;  // k (k+1) ... (k + 2j - 2)
  for (int j = 1; j <= 5; ++j) {
    tail += kB[j - 1] * rising * std::pow(N, -k - 2 * j + 1);
    rising *= static_cast<double>(k + 2 * j - 1) * static_cast<double>(k + 2 * j);
  }
  return s + tail;
}

const std::array<double, 40>& zeta_minus_one_table() {
  static const std::array<double, 40> table = [] {
    std::array<double, 40> t{};
    for (int k = 2; k < 40; ++k) t[k] = zeta_minus_one(k);
    return t;
  }();
  return table;
}

// ln Gamma(2 + z) = z (1 - gamma) + sum_k (-1)^k (zeta(k) - 1) z^k / k, |z| <= 1/2.
double log_gamma_two_plus(double z) {
  const auto& zm1 = zeta_minus_one_table();
  double sum = 0.0;
  double zk = z * z;
  for (int k = 2; k < 40; ++k) {
    const double term = zm1[k] * zk / k;
    sum += (k % 2 == 0) ? term : -term;
    zk *= z;
  }
  return z * (1.0 - kEulerGamma) + sum;
}

}  // namespace

double log_gamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw std::domain_error("log_gamma: argument must be positive and finite, got " + std::to_string(x));
  }
  if (x < 0.5) return log_gamma(x + 1.0) - std::log(x);
  if (x <= 1.5) {
    const double z = x - 1.0;
    return log_gamma_two_plus(z) - std::log1p(z);
  }
  if (x <= 2.5) return log_gamma_two_plus(x - 2.0);
  return lanczos_log_gamma(x);
}

double gamma_fn(double x) { return std::exp(log_gamma(x)); }

double laguerre_eval(int k, double alpha, double u) {
  if (!(alpha > -1.0)) throw std::domain_error("laguerre_eval: alpha must exceed -1");
  if (k < 0) throw std::domain_error("laguerre_eval: degree must be non-negative");
  if (k == 0) return 1.0;
  double prev = 1.0;
  double cur = 1.0 + alpha - u;
  for (int j = 1; j < k; ++j) {
    const double next = ((2.0 * j + 1.0 + alpha - u) * cur - (j + alpha) * prev) / (j + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

std::vector<double> laguerre_all(int kmax, double alpha, double u) {
  if (!(alpha > -1.0)) throw std::domain_error("laguerre_all: alpha must exceed -1");
  if (kmax < 0) return {};
  std::vector<double> out(static_cast<std::size_t>(kmax) + 1);
  out[0] = 1.0;
  if (kmax >= 1) out[1] = 1.0 + alpha - u;
  for (int j = 1; j < kmax; ++j) {
    out[j + 1] = ((2.0 * j + 1.0 + alpha - u) * out[j] - (j + alpha) * out[j - 1]) / (j + 1.0);
  }
  return out;
}

double ball_volume(int d) {
  if (d < 1) throw std::domain_error("ball_volume: dimension must be positive");
  return std::exp(0.5 * d * std::log(kPi) - log_gamma(0.5 * d + 1.0));
}

double sphere_area(int d) {
  if (d < 1) throw std::domain_error("sphere_area: dimension must be positive");
  return 2.0 * std::exp(0.5 * d * std::log(kPi) - log_gamma(0.5 * d));
}

TridiagonalEigen tridiagonal_eigen(std::vector<double> d, std::vector<double> offdiag) {
  const int n = static_cast<int>(d.size());
  if (n == 0) return {};
  if (static_cast<int>(offdiag.size()) != n - 1) {
    throw std::invalid_argument("tridiagonal_eigen: offdiag must have n-1 entries");
  }
  std::vector<double> e(offdiag);
  e.push_back(0.0);
  std::vector<double> z(n, 0.0);
  z[0] = 1.0;
  constexpr double eps = std::numeric_limits<double>::epsilon();

  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m = l;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd) break;
      }
      if (m != l) {
        if (iter++ == 60) throw std::runtime_error("tridiagonal_eigen: QL iteration did not converge");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0;
        double c = 1.0;
        double p = 0.0;
        int i = m - 1;
        bool underflow = false;
        for (; i >= l; --i) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            underflow = true;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          f = z[i + 1];
          z[i + 1] = s * z[i] + c * f;
          z[i] = c * z[i] - s * f;
        }
        if (underflow) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return d[a] < d[b]; });
  TridiagonalEigen out;
  out.values.reserve(n);
  out.first_components.reserve(n);
  for (int idx : order) {
    out.values.push_back(d[idx]);
    out.first_components.push_back(z[idx]);
  }
  return out;
}

namespace {

// L_m^{(alpha)}(x) and L_{m-1}^{(alpha)}(x) sharing a common scale: the true
// values are mantissa * exp(log_scale).
struct ScaledPair {
  double cur;
  double prev;
  double log_scale;
};

ScaledPair laguerre_scaled(int m, double alpha, double x) {
  double prev = 1.0;
  double cur = 1.0 + alpha - x;
  double log_scale = 0.0;
  if (m == 0) return {1.0, 0.0, 0.0};
  for (int j = 1; j < m; ++j) {
    const double next = ((2.0 * j + 1.0 + alpha - x) * cur - (j + alpha) * prev) / (j + 1.0);
    prev = cur;
    cur = next;
    const double mag = std::abs(cur);
    if (mag > 1e100) {
      cur /= mag;
      prev /= mag;
      log_scale += std::log(mag);
    }
  }
  return {cur, prev, log_scale};
}

}  // namespace

QuadratureRule gauss_laguerre_rule(int n, double alpha) {
  if (!(alpha > -1.0)) throw std::domain_error("gauss_laguerre_rule: alpha must exceed -1");
  if (n < 1 || n > 256) throw std::domain_error("gauss_laguerre_rule: n must lie in [1, 256]");

  std::vector<double> diag(n);
  std::vector<double> off(n - 1);
  for (int i = 0; i < n; ++i) diag[i] = 2.0 * i + alpha + 1.0;
  for (int i = 1; i < n; ++i) off[i - 1] = std::sqrt(i * (i + alpha));
  TridiagonalEigen eig = tridiagonal_eigen(std::move(diag), std::move(off));

  QuadratureRule rule;
  rule.alpha = alpha;
  rule.nodes = eig.values;
  for (double& x : rule.nodes) {
    for (int it = 0; it < 4; ++it) {
      const ScaledPair p = laguerre_scaled(n, alpha, x);
      const double denom = n * p.cur - (n + alpha) * p.prev;
      if (denom == 0.0) break;
      const double step = x * p.cur / denom;
      x -= step;
      if (std::abs(step) <= 4.0 * std::numeric_limits<double>::epsilon() * x) break;
    }
  }
  std::sort(rule.nodes.begin(), rule.nodes.end());

  const double log_front = log_gamma(n + alpha + 1.0) - log_gamma(n + 1.0) - 2.0 * std::log(n + 1.0);
  rule.weights.resize(n);
  rule.log_weights.resize(n);
  for (int i = 0; i < n; ++i) {
    const double x = rule.nodes[i];
    const ScaledPair p = laguerre_scaled(n + 1, alpha, x);
    const double log_abs_l = std::log(std::abs(p.cur)) + p.log_scale;
    rule.log_weights[i] = log_front + std::log(x) - 2.0 * log_abs_l;
    rule.weights[i] = std::exp(rule.log_weights[i]);
  }
  return rule;
}

LegendreRule gauss_legendre_rule(int n) {
  if (n < 1) throw std::domain_error("gauss_legendre_rule: n must be positive");
  LegendreRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 30; ++it) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 5e-16) break;
    }
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

}  // namespace sul
