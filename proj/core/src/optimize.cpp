#include "sul/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "sul/bounds.hpp"
#include "sul/simplex.hpp"
#include "sul/specialfn.hpp"

namespace sul {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kLadderMin = 10;

double to_t(double r) { return 2.0 * kPi * r * r; }
double to_r(double t) { return std::sqrt(t / (2.0 * kPi)); }

double l2norm(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

// e^{-t/2} L_k(t) for every k in the basis.
std::vector<double> basis_row(const Eigenbasis& B, double alpha, double t) {
  const std::vector<double> l = laguerre_all(B.indices.back(), alpha, t);
  const double e = std::exp(-0.5 * t);
  std::vector<double> row(B.indices.size());
  for (std::size_t j = 0; j < row.size(); ++j) row[j] = e * l[B.indices[j]];
  return row;
}

void normalise(std::vector<double>& row) {
  double m = 0.0;
  for (double v : row) m = std::max(m, std::abs(v));
  if (m > 0.0) {
    for (double& v : row) v /= m;
  }
}

struct LpData {
  std::vector<double> grid_t;  // sign constraints
  std::vector<double> integrals;
};

struct LpOutcome {
  bool feasible = false;
  std::vector<double> y;  // basis coefficients in column-scaled units
  double margin = 0.0;
  std::int64_t pivots = 0;
};

LpOutcome solve_once(const Eigenbasis& B, double alpha, const LpData& data) {
  const int N = static_cast<int>(B.indices.size());
  std::vector<std::vector<double>> A;
  A.reserve(data.grid_t.size());
  for (double t : data.grid_t) {
    A.push_back(basis_row(B, alpha, t));
    normalise(A.back());
  }
  std::vector<double> I = data.integrals;
  normalise(I);

  // Column scaling keeps the tableau entries comparable.
  std::vector<double> col(N, 0.0);
  for (const auto& row : A) {
    for (int j = 0; j < N; ++j) col[j] = std::max(col[j], std::abs(row[j]));
  }
  for (int j = 0; j < N; ++j) {
    col[j] = std::max(col[j], std::abs(I[j]));
    if (col[j] == 0.0) col[j] = 1.0;
  }

  // Variables: u_0..u_{N-1}, v_0..v_{N-1}, margin.
  LinearProgram lp;
  lp.num_vars = 2 * N + 1;
  auto make = [&](const std::vector<double>& a, double margin_coef) {
    std::vector<double> r(lp.num_vars, 0.0);
    for (int j = 0; j < N; ++j) {
      r[j] = a[j] / col[j];
      r[N + j] = -a[j] / col[j];
    }
    r[2 * N] = margin_coef;
    return r;
  };
  // Distinct tiny right-hand sides keep the homogeneous grid rows from
  // making every vertex degenerate (which invites cycling).
  for (std::size_t i = 0; i < A.size(); ++i) {
    const double eps = 1e-9 * (1.0 + std::fmod(0.6180339887498949 * static_cast<double>(i + 1), 1.0));
    lp.add_row(make(A[i], -1.0), RowSense::Ge, -eps);
  }
  lp.add_row(make(I, 0.0), RowSense::Le, -1e-9);
  {
    // Tail sign: (-1)^K c_top = 1 (scaled units).
    std::vector<double> r(lp.num_vars, 0.0);
    const double sg = (B.indices.back() % 2 == 0) ? 1.0 : -1.0;
    r[N - 1] = sg;
    r[2 * N - 1] = -sg;
    lp.add_row(std::move(r), RowSense::Eq, 1.0);
  }
  {
    std::vector<double> r(lp.num_vars, 0.0);
    r[2 * N] = 1.0;
    lp.add_row(std::move(r), RowSense::Le, 1.0);
  }
  lp.objective.assign(lp.num_vars, 0.0);
  lp.objective[2 * N] = -1.0;

  // A stalled LP near the feasibility boundary is treated as infeasible; the
  // bisection only ever trusts certified witnesses anyway.
  SimplexOptions so;
  so.max_pivots = 50LL * (lp.num_vars + static_cast<std::int64_t>(lp.rows.size()));
  const LpSolution sol = solve_lp(lp, so);
  LpOutcome out;
  out.pivots = sol.pivots;
  if (sol.status != LpStatus::Optimal) return out;
  out.feasible = true;
  out.margin = sol.x[2 * N];
  out.y.resize(N);
  for (int j = 0; j < N; ++j) out.y[j] = (sol.x[j] - sol.x[N + j]) / col[j];
  return out;
}

// Unit Euclidean norm; a positive factor changes neither the signs nor r.
std::vector<double> to_coeffs(const Eigenbasis& B, const std::vector<double>& y) {
  std::vector<double> c(B.indices.back() + 1, 0.0);
  const double n = l2norm(y);
  for (std::size_t j = 0; j < y.size(); ++j) c[B.indices[j]] = y[j] / n;
  return c;
}

// Local minima of negative runs of the radial factor on [r_lo, r_hi].
std::vector<double> negative_dips(const LaguerreFunction& f, double r_lo, double r_hi, int samples) {
  std::vector<double> out;
  bool in_run = false;
  double best_r = 0.0;
  double best_v = 0.0;
  for (int i = 0; i <= samples; ++i) {
    const double r = r_lo + (r_hi - r_lo) * i / samples;
    const double v = evaluate_radial_profile(f, r);
    if (v < 0.0) {
      if (!in_run || v < best_v) {
        best_r = r;
        best_v = v;
      }
      in_run = true;
    } else if (in_run) {
      out.push_back(best_r);
      in_run = false;
    }
  }
  if (in_run) out.push_back(best_r);
  return out;
}

}  // namespace

Eigenbasis eigenbasis(int s, int d, const HarmonicFactor& h, int N) {
  if (s != 1 && s != -1) throw std::invalid_argument("eigenbasis: s must be +1 or -1");
  if (N < 1) throw std::invalid_argument("eigenbasis: N must be positive");
  h.validate(d);
  const int ell = h.ell;
  const int r = ell % 2;
  // (-i)^l (-1)^k = i^{3l + 2k} must equal s i^r.
  const int target = (s == 1 ? 0 : 2) + r;
  const int diff = (((target - 3 * ell) % 4) + 4) % 4;
  if (diff % 2 != 0) throw std::invalid_argument("eigenbasis: parity contradiction");
  const int k0 = (diff / 2) % 2;
  Eigenbasis B;
  B.d = d;
  B.harmonic = h;
  B.eigenvalue = UnitPhase::from_sign(s) * UnitPhase::from_power(r);
  for (int j = 0; j < N; ++j) B.indices.push_back(k0 + 2 * j);
  return B;
}

Certification certify(const LaguerreFunction& f, const Weight& w) {
  Certification c;
  c.radius = last_sign_change(f, w);
  c.integral = weighted_integral(f, w);
  c.coeff_norm = l2norm(f.coeffs);
  c.integral_ok = c.integral <= 1e-10 * c.coeff_norm;
  return c;
}

LpAttempt solve_at_radius(const Eigenbasis& basis, const Weight& w, double r, const LpOptions& opt) {
  if (!(r > 0.0)) throw std::invalid_argument("solve_at_radius: r must be positive");
  if (basis.indices.empty()) throw std::invalid_argument("solve_at_radius: empty basis");
  const int N = static_cast<int>(basis.indices.size());
  const int M = opt.grid_size > 0 ? opt.grid_size : 10 * N;
  if (M < 4 * N) throw std::invalid_argument("solve_at_radius: grid must have at least 4N points");
  const double alpha = 0.5 * w.d + basis.harmonic.ell - 1.0;
  const int K = basis.indices.back();

  LpData data;
  const double t_max = std::max(4.0 * K + 2.0 * alpha + 2.0, 2.0 * to_t(r));
  const double R = to_r(t_max);
  for (int i = 0; i < M; ++i) {
    const double c = std::cos(kPi * i / (M - 1));
    data.grid_t.push_back(to_t(0.5 * (r + R) - 0.5 * (R - r) * c));
  }
  for (int k : basis.indices) {
    std::vector<double> e(k + 1, 0.0);
    e[k] = 1.0;
    data.integrals.push_back(weighted_integral(make_laguerre(w.d, basis.harmonic, std::move(e)), w));
  }

  LpAttempt out;
  for (int round = 0; round <= opt.refinements; ++round) {
    const LpOutcome lp = solve_once(basis, alpha, data);
    out.pivots += lp.pivots;
    out.rounds = round + 1;
    if (!lp.feasible) {
      out.feasible = false;
      out.coeffs.clear();
      return out;
    }
    out.feasible = true;
    out.margin = lp.margin;
    out.coeffs = to_coeffs(basis, lp.y);

    const LaguerreFunction f = make_laguerre(w.d, basis.harmonic, out.coeffs);
    const RadiusResult rr = last_sign_change(f, w);
    if (rr.value() <= r + 1e-9 * (1.0 + r)) break;
    std::vector<double> extra = negative_dips(f, r, std::max(rr.certified_tail_from, rr.r), 20 * M);
    if (rr.eventually_nonnegative() && rr.bracket_lo >= r) extra.push_back(rr.bracket_lo);
    if (extra.empty()) break;
    for (double x : extra) data.grid_t.push_back(to_t(x));
    std::sort(data.grid_t.begin(), data.grid_t.end());
    data.grid_t.erase(std::unique(data.grid_t.begin(), data.grid_t.end()), data.grid_t.end());
  }
  return out;
}

OptimizeResult bisect_upper_bound(int s, const Weight& w, int N, const LpOptions& opt) {
  if (!(opt.tolerance >= 1e-4 * (1.0 - 1e-12))) throw std::invalid_argument("bisect_upper_bound: tolerance must be >= 1e-4");
  if (w.gamma_total() < 0.0) throw std::invalid_argument("bisect_upper_bound: negative homogeneity is unsupported");
  const Eigenbasis basis = eigenbasis(s, w.d, w.harmonic, N);
  const Thm1Result thm = thm1_upper(s, w);

  OptimizeResult res;
  res.N = N;
  res.analytic_upper = thm.analytic;
  res.fallback = true;
  res.witness = thm.witness;
  res.r_upper = thm.numeric;
  res.certification.radius = last_sign_change(thm.witness, w);
  res.certification.integral = weighted_integral(thm.witness, w);
  res.certification.integral_ok = res.certification.integral <= 1e-10;

  double lo = 0.0;
  double hi = thm.analytic;
  // The span for ceil(N/2) is contained in the span for N, so its certified
  // witness is a valid incumbent and a tighter starting bracket.
  if (N > kLadderMin) {
    OptimizeResult sub = bisect_upper_bound(s, w, (N + 1) / 2, opt);
    res.lp_iterations += sub.lp_iterations;
    if (!sub.fallback && sub.r_upper < res.r_upper) {
      res.r_upper = sub.r_upper;
      res.witness = std::move(sub.witness);
      res.certification = sub.certification;
      res.fallback = false;
      hi = std::min(hi, res.r_upper);
    }
  }
  while (hi - lo > opt.tolerance) {
    const double mid = 0.5 * (lo + hi);
    const LpAttempt at = solve_at_radius(basis, w, mid, opt);
    res.lp_iterations += at.pivots;
    BisectionStep step{mid, at.feasible, kInf, at.pivots, at.rounds};
    if (at.feasible) {
      const LaguerreFunction f = make_laguerre(w.d, basis.harmonic, at.coeffs);
      const Certification c = certify(f, w);
      if (c.integral_ok && c.radius.eventually_nonnegative()) {
        step.certified = c.radius.value();
        if (step.certified < res.r_upper) {
          res.r_upper = step.certified;
          res.witness = f;
          res.certification = c;
          res.fallback = false;
        }
      }
      hi = mid;
    } else {
      lo = mid;
    }
    res.steps.push_back(step);
  }
  return res;
}

Corollary4Report verify_corollary4(int base, int ell, int N, const LpOptions& opt) {
  const SharpEntry* entry = nullptr;
  for (const auto& e : sharp_table()) {
    if (e.base == base && e.ell == ell) entry = &e;
  }
  if (entry == nullptr) throw std::out_of_range("verify_corollary4: (base, ell) is not a tabulated case");
  Corollary4Report rep;
  rep.base = base;
  rep.ell = ell;
  rep.d = entry->d;
  rep.s = entry->s;
  rep.sharp = entry->value;
  const Weight w = ell == 0 ? power_weight(rep.d, 0.0)
                            : make_weight(rep.d, HarmonicFactor::coordinate_product(ell), 0.0);
  rep.result = bisect_upper_bound(rep.s, w, N, opt);
  rep.numeric = rep.result.r_upper;
  rep.gap = rep.numeric - rep.sharp;
  rep.floor_ok = rep.numeric >= rep.sharp - 1e-3;
  return rep;
}

}  // namespace sul
