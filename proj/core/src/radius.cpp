#include "sul/radius.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "sul/specialfn.hpp"

namespace sul {

namespace {

constexpr int kPanels = 4096;
constexpr double kEps = std::numeric_limits<double>::epsilon();

void check_compatible(const HarmonicFactor& fh, const Weight& w, int fd) {
  if (w.d != fd) throw std::invalid_argument("last_sign_change: weight and function dimensions differ");
  if (!(w.harmonic == fh)) {
    throw std::invalid_argument("last_sign_change: P f does not reduce to a radial sign problem");
  }
}

int sgn(double v) { return (v > 0.0) - (v < 0.0); }

// Bisection on [lo, hi] where `opposite(lo)` holds and `opposite(hi)` does not.
template <class Pred>
std::pair<double, double> bisect(Pred opposite, double lo, double hi, double tol) {
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (opposite(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return {lo, hi};
}

// ---- Gaussian mixtures ---------------------------------------------------

struct ScaledMixture {
  std::vector<GaussianTerm> terms;  // non-zero terms, sorted by a
  double a_min = 0.0;

  // u(r) e^{a_min pi r^2}; same sign as u, immune to underflow.
  double operator()(double r) const {
    double s = 0.0;
    for (const auto& t : terms) s += t.c * std::exp(-(t.a - a_min) * kPi * r * r);
    return s;
  }
};

// ---- Laguerre polynomials ------------------------------------------------

// p(t) = sum_k c_k L_k^{(alpha)}(t) and its Taylor data.
class LaguerrePoly {
 public:
  LaguerrePoly(std::vector<double> c, double alpha) : c_(std::move(c)), alpha_(alpha) {
    while (!c_.empty() && c_.back() == 0.0) c_.pop_back();
    inv_fact_.assign(c_.size() + 1, 1.0);
    for (std::size_t j = 1; j < inv_fact_.size(); ++j) inv_fact_[j] = inv_fact_[j - 1] / static_cast<double>(j);
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }

  // value and a rounding-error scale
  std::pair<double, double> eval(double t) const { return derivative(0, t); }

  // q_j = p^{(j)}(t) / j! for j = 0..K, and matching rounding scales.
  void taylor(double t, std::vector<double>& q, std::vector<double>& err) const {
    const int K = degree();
    q.resize(K + 1);
    err.resize(K + 1);
    for (int j = 0; j <= K; ++j) {
      const auto [v, e] = derivative(j, t);
      q[j] = v * inv_fact_[j];
      err[j] = e * inv_fact_[j];
    }
  }

  int sign_at_infinity() const {
    const int K = degree();
    return sgn(c_[K]) * ((K % 2 == 0) ? 1 : -1);
  }

 private:
  // p^{(j)}(t) = (-1)^j sum_{k >= j} c_k L_{k-j}^{(alpha + j)}(t)
  std::pair<double, double> derivative(int j, double t) const {
    const int K = degree();
    const double a = alpha_ + j;
    double prev = 0.0;
    double cur = 1.0;  // L_0
    double s = c_[j];
    double scale = std::abs(c_[j]);
    for (int n = 0; j + n + 1 <= K; ++n) {
      const double next = ((2.0 * n + 1.0 + a - t) * cur - (n + a) * prev) / (n + 1.0);
      prev = cur;
      cur = next;
      s += c_[j + n + 1] * cur;
      scale += std::abs(c_[j + n + 1] * cur);
    }
    if (j % 2 == 1) s = -s;
    // Three-term recurrences lose a few ulps per step.
    return {s, 8.0 * (K + 4.0) * kEps * scale};
  }

  std::vector<double> c_;
  std::vector<double> inv_fact_;
  double alpha_;
};

// True when p is certified root-free on [m - h, m + h].
bool excluded(const std::vector<double>& q, const std::vector<double>& err, double h) {
  double bound = err[0];
  double hp = 1.0;
  for (std::size_t j = 1; j < q.size(); ++j) {
    hp *= h;
    bound += (std::abs(q[j]) + err[j]) * hp;
  }
  return std::abs(q[0]) > bound;
}

struct Finding {
  bool opposite = false;
  bool certain = true;  // false: x is where the sign could not be resolved
  double x = 0.0;       // a point with sign(p) = -sign_inf
};

class LaguerreSearch {
 public:
  LaguerreSearch(const LaguerrePoly& p, int sign_inf) : p_(p), sign_inf_(sign_inf) {}

  bool opposite(double t) const {
    const auto [v, e] = p_.eval(t);
    return sgn(v) == -sign_inf_ && std::abs(v) > e;
  }

  // Right-first search of [a, b]; on return with opposite == false the whole
  // interval is certified to carry the sign at infinity. A sliver that stays
  // inside the rounding band is reported (conservatively) as a sign change.
  Finding examine(double a, double b, int depth) {
    if (opposite(b)) return {true, true, b};
    const double m = 0.5 * (a + b);
    p_.taylor(m, q_, err_);
    if (excluded(q_, err_, 0.5 * (b - a))) {
      if (sgn(q_[0]) == -sign_inf_) return {true, true, b};
      return {};
    }
    if (std::abs(q_[0]) <= err_[0] || depth >= 40 || b - a <= 1e-13 * (1.0 + b)) {
      if (opposite(m)) return {true, true, m};
      return {true, false, b};
    }
    Finding right = examine(m, b, depth + 1);
    if (right.opposite) return right;
    return examine(a, m, depth + 1);
  }

 private:
  const LaguerrePoly& p_;
  int sign_inf_;
  std::vector<double> q_;
  std::vector<double> err_;
};

// Smallest T (by doubling) where every Taylor coefficient of p carries the
// sign at infinity; then p has no root on [T, inf).
double laguerre_tail(const LaguerrePoly& p, double alpha) {
  const int K = p.degree();
  const int s = p.sign_at_infinity();
  std::vector<double> q;
  std::vector<double> err;
  double T = std::max(1.0, 4.0 * K + 2.0 * alpha + 2.0);
  for (int it = 0; it < 80; ++it) {
    p.taylor(T, q, err);
    bool ok = true;
    for (int j = 0; j <= K && ok; ++j) {
      ok = sgn(q[j]) == s && std::abs(q[j]) > err[j];
    }
    if (ok) return T;
    T *= 2.0;
  }
  throw std::runtime_error("last_sign_change: could not certify the polynomial tail");
}

}  // namespace

double RadiusResult::value() const {
  return sign_at_infinity > 0 ? r : std::numeric_limits<double>::infinity();
}

RadiusResult last_sign_change(const GaussianMixture& f, const Weight& w, double tol) {
  check_compatible(f.harmonic, w, f.d);
  if (!(tol > 0.0)) throw std::invalid_argument("last_sign_change: tolerance must be positive");
  ScaledMixture u;
  for (const auto& t : f.terms) {
    if (t.c != 0.0) u.terms.push_back(t);
  }
  if (u.terms.empty()) throw std::invalid_argument("last_sign_change: zero function");
  std::sort(u.terms.begin(), u.terms.end(), [](const auto& x, const auto& y) { return x.a < y.a; });
  u.a_min = u.terms.front().a;

  RadiusResult res;
  res.sign_at_infinity = sgn(u.terms.front().c);
  if (u.terms.size() == 1) return res;

  // Beyond x = pi r^2 = log(S) / (a_2 - a_min) the slowest term dominates
  // the sum of all the others.
  double S = 0.0;
  for (std::size_t j = 1; j < u.terms.size(); ++j) S += std::abs(u.terms[j].c);
  S /= std::abs(u.terms.front().c);
  const double gap = u.terms[1].a - u.a_min;
  const double x_tail = S > 1.0 ? std::log(S) / gap : 0.0;
  const double r_tail = std::sqrt(x_tail / kPi);
  res.certified_tail_from = r_tail;
  if (r_tail == 0.0) return res;

  const int s_inf = res.sign_at_infinity;
  auto opposite = [&](double r) { return sgn(u(r)) == -s_inf; };
  const double R = r_tail * (1.0 + 1e-12);
  const double h = R / kPanels;
  for (int i = kPanels - 1; i >= 0; --i) {
    const double a = i * h;
    if (!opposite(a)) continue;
    const auto [lo, hi] = bisect(opposite, a, std::min(R, a + h), tol);
    res.r = 0.5 * (lo + hi);
    res.bracket_lo = lo;
    res.bracket_hi = hi;
    return res;
  }
  return res;
}

RadiusResult last_sign_change(const LaguerreFunction& f, const Weight& w, double tol) {
  check_compatible(f.harmonic, w, f.d);
  if (!(tol > 0.0)) throw std::invalid_argument("last_sign_change: tolerance must be positive");
  const double alpha = f.alpha();
  const LaguerrePoly p(f.coeffs, alpha);
  if (p.degree() < 0) throw std::invalid_argument("last_sign_change: zero function");

  RadiusResult res;
  res.sign_at_infinity = p.sign_at_infinity();
  if (p.degree() == 0) return res;

  // u(r) = e^{-pi r^2} p(2 pi r^2)
  const double T = laguerre_tail(p, alpha);
  const double r_tail = std::sqrt(T / (2.0 * kPi));
  res.certified_tail_from = r_tail;

  auto to_t = [](double r) { return 2.0 * kPi * r * r; };
  auto to_r = [](double t) { return std::sqrt(t / (2.0 * kPi)); };
  LaguerreSearch search(p, res.sign_at_infinity);

  const double h = r_tail / kPanels;
  for (int i = kPanels - 1; i >= 0; --i) {
    const double ta = to_t(i * h);
    const double tb = to_t((i + 1) * h);
    const Finding hit = search.examine(ta, tb, 0);
    if (!hit.opposite) continue;
    if (!hit.certain) {
      res.r = res.bracket_lo = res.bracket_hi = to_r(hit.x);
      return res;
    }
    // Everything right of the hit is sign-certified; the change sits in
    // [hit.x, tb] and bisection in r pins it down.
    auto opp_r = [&](double r) { return search.opposite(to_t(r)); };
    const auto [lo, hi] = bisect(opp_r, to_r(hit.x), (i + 1) * h, tol);
    res.r = 0.5 * (lo + hi);
    res.bracket_lo = lo;
    res.bracket_hi = hi;
    return res;
  }
  return res;
}

double scaled_radius_product(const GaussianMixture& f, const Weight& w, int s) {
  if (s != 1 && s != -1) throw std::invalid_argument("scaled_radius_product: s must be +1 or -1");
  const PhasedMixture ft = fourier_transform(f);
  // s (-i)^r times the transform's own phase
  const UnitPhase total = UnitPhase::from_sign(s) * UnitPhase::from_power(3 * parity(w)) * ft.phase;
  if (!total.is_real()) throw std::domain_error("scaled_radius_product: s (-i)^r P f^ is not real-valued");
  const GaussianMixture g = scale(ft.mixture, total.real_sign());
  const double r1 = last_sign_change(f, w).value();
  const double r2 = last_sign_change(g, w).value();
  if (!std::isfinite(r1) || !std::isfinite(r2)) {
    throw std::domain_error("scaled_radius_product: a factor is not eventually non-negative");
  }
  return std::sqrt(r1 * r2);
}

}  // namespace sul
