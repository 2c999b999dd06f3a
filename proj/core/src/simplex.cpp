#include "sul/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sul {

void LinearProgram::add_row(std::vector<double> a, RowSense sense, double b) {
  if (static_cast<int>(a.size()) != num_vars) throw std::invalid_argument("LP row has the wrong length");
  rows.push_back({std::move(a), sense, b});
}

std::string_view to_string(LpStatus s) {
  switch (s) {
    case LpStatus::Optimal:
      return "optimal";
    case LpStatus::Infeasible:
      return "infeasible";
    case LpStatus::Unbounded:
      return "unbounded";
    case LpStatus::PivotLimit:
      return "pivot_limit";
  }
  return "infeasible";
}

namespace {

// Dense tableau over the equality form [A | b]. The original matrix is kept
// so the tableau can be rebuilt as B^{-1} [A | b] whenever rounding has
// accumulated.
class Tableau {
 public:
  Tableau(int rows, int cols)
      : m_(rows), n_(cols), orig_(rows * (cols + 1), 0.0), t_((rows + 1) * (cols + 1), 0.0), basis_(rows, -1), c_(cols, 0.0) {}

  double& orig(int i, int j) { return orig_[i * (n_ + 1) + j]; }
  double& at(int i, int j) { return t_[i * (n_ + 1) + j]; }
  double at(int i, int j) const { return t_[i * (n_ + 1) + j]; }
  double& rhs(int i) { return at(i, n_); }
  double& cost(int j) { return at(m_, j); }

  int rows() const { return m_; }
  int cols() const { return n_; }
  std::vector<int>& basis() { return basis_; }

  void load() {
    for (int i = 0; i < m_; ++i) std::copy_n(&orig_[i * (n_ + 1)], n_ + 1, &t_[i * (n_ + 1)]);
  }

  // Reduced costs for objective c (the rhs slot holds minus the objective).
  void set_costs(std::vector<double> c) {
    c_ = std::move(c);
    for (int j = 0; j < n_; ++j) cost(j) = c_[j];
    cost(n_) = 0.0;
    for (int i = 0; i < m_; ++i) {
      const double cb = c_[basis_[i]];
      if (cb == 0.0) continue;
      for (int j = 0; j <= n_; ++j) cost(j) -= cb * at(i, j);
    }
  }

  void pivot(int r, int c) {
    const int w = n_ + 1;
    double* pr = &t_[r * w];
    const double inv = 1.0 / pr[c];
    for (int j = 0; j < w; ++j) pr[j] *= inv;
    pr[c] = 1.0;
    for (int i = 0; i <= m_; ++i) {
      if (i == r) continue;
      double* pi = &t_[i * w];
      const double f = pi[c];
      if (f == 0.0) continue;
      for (int j = 0; j < w; ++j) pi[j] -= f * pr[j];
      pi[c] = 0.0;
    }
    basis_[r] = c;
  }

  // t = B^{-1} [A | b] by Gauss-Jordan elimination with partial pivoting on
  // [B | A | b]. Returns false (tableau untouched) if B is numerically singular.
  bool refactor() {
    const int w = m_ + n_ + 1;
    std::vector<double> g(static_cast<std::size_t>(m_) * w, 0.0);
    for (int i = 0; i < m_; ++i) {
      for (int k = 0; k < m_; ++k) g[i * w + k] = orig(i, basis_[k]);
      std::copy_n(&orig_[i * (n_ + 1)], n_ + 1, &g[i * w + m_]);
    }
    for (int k = 0; k < m_; ++k) {
      int p = k;
      for (int i = k + 1; i < m_; ++i) {
        if (std::abs(g[i * w + k]) > std::abs(g[p * w + k])) p = i;
      }
      if (std::abs(g[p * w + k]) < 1e-13) return false;
      if (p != k) std::swap_ranges(&g[p * w], &g[p * w] + w, &g[k * w]);
      const double inv = 1.0 / g[k * w + k];
      for (int j = k; j < w; ++j) g[k * w + j] *= inv;
      for (int i = 0; i < m_; ++i) {
        if (i == k) continue;
        const double f = g[i * w + k];
        if (f == 0.0) continue;
        for (int j = k; j < w; ++j) g[i * w + j] -= f * g[k * w + j];
      }
    }
    // Row k of the reduced system now belongs to basic variable basis_[k].
    for (int i = 0; i < m_; ++i) std::copy_n(&g[i * w + m_], n_ + 1, &t_[i * (n_ + 1)]);
    for (int i = 0; i < m_; ++i) at(i, basis_[i]) = 1.0;
    set_costs(c_);
    return true;
  }

 private:
  int m_;
  int n_;
  std::vector<double> orig_;
  std::vector<double> t_;
  std::vector<int> basis_;
  std::vector<double> c_;
};

enum class Step { Optimal, Unbounded, Limit };

// Dantzig pricing with a largest-pivot tie break in the ratio test. After a
// run of degenerate pivots it switches for good to Bland's rule (smallest
// index entering, smallest basic index leaving), which rules out cycling.
// Columns [0, allowed) may enter.
Step run(Tableau& T, int allowed, const SimplexOptions& opt, std::int64_t& pivots) {
  constexpr int kStallLimit = 50;
  constexpr int kRefactorEvery = 100;
  const int m = T.rows();
  int degenerate = 0;
  int since_refactor = 0;
  bool bland = false;
  // Columns whose only positive entries are below the pivot tolerance; they
  // are passed over until the next pivot changes the tableau.
  std::vector<char> skip(allowed, 0);
  while (true) {
    bland = bland || degenerate >= kStallLimit;
    int enter = -1;
    double most = -opt.pivot_tol;
    for (int j = 0; j < allowed; ++j) {
      if (skip[j] || T.cost(j) >= most) continue;
      enter = j;
      if (bland) break;
      most = T.cost(j);
    }
    if (enter < 0) return Step::Optimal;

    double colmax = 0.0;
    for (int i = 0; i < m; ++i) colmax = std::max(colmax, T.at(i, enter));
    if (colmax <= 0.0) return Step::Unbounded;
    const double tol = opt.pivot_tol * std::max(1.0, colmax);
    int leave = -1;
    double best = 0.0;
    for (int i = 0; i < m; ++i) {
      const double a = T.at(i, enter);
      if (a <= tol) continue;
      const double ratio = std::max(0.0, T.rhs(i)) / a;
      if (leave < 0 || ratio < best) {
        leave = i;
        best = ratio;
      }
    }
    if (leave < 0) {
      skip[enter] = 1;
      continue;
    }
    // Among (near-)ties prefer the largest pivot, or the smallest basic index under Bland.
    const double slop = 1e-12 * (1.0 + best);
    for (int i = 0; i < m; ++i) {
      const double a = T.at(i, enter);
      if (a <= tol || i == leave) continue;
      const double ratio = std::max(0.0, T.rhs(i)) / a;
      if (ratio > best + slop) continue;
      const bool better = bland ? T.basis()[i] < T.basis()[leave] : a > T.at(leave, enter);
      if (better) leave = i;
    }
    if (pivots >= opt.max_pivots) return Step::Limit;
    degenerate = best <= slop ? degenerate + 1 : 0;
    T.pivot(leave, enter);
    ++pivots;
    std::fill(skip.begin(), skip.end(), 0);
    if (++since_refactor >= kRefactorEvery) {
      T.refactor();
      since_refactor = 0;
    }
  }
}

}  // namespace

LpSolution solve_lp(const LinearProgram& lp, const SimplexOptions& opt) {
  const int n = lp.num_vars;
  const int m = static_cast<int>(lp.rows.size());
  if (!lp.objective.empty() && static_cast<int>(lp.objective.size()) != n) {
    throw std::invalid_argument("LP objective has the wrong length");
  }

  // Normalise every row to b >= 0, then count slack and artificial columns.
  std::vector<int> sign(m, 1);
  std::vector<RowSense> sense(m);
  int n_slack = 0;
  int n_art = 0;
  double bmax = 0.0;
  for (int i = 0; i < m; ++i) {
    const LpRow& row = lp.rows[i];
    sense[i] = row.sense;
    // b < 0, or a homogeneous >= row, is negated (the latter then needs no artificial).
    if (row.b < 0.0 || (row.b == 0.0 && row.sense == RowSense::Ge)) {
      sign[i] = -1;
      if (row.sense == RowSense::Le) sense[i] = RowSense::Ge;
      else if (row.sense == RowSense::Ge) sense[i] = RowSense::Le;
    }
    if (sense[i] != RowSense::Eq) ++n_slack;
    if (sense[i] != RowSense::Le) ++n_art;
    bmax = std::max(bmax, std::abs(row.b));
  }

  const int art0 = n + n_slack;
  const int cols = art0 + n_art;
  Tableau T(m, cols);
  int slack = n;
  int art = art0;
  for (int i = 0; i < m; ++i) {
    const LpRow& row = lp.rows[i];
    for (int j = 0; j < n; ++j) T.orig(i, j) = sign[i] * row.a[j];
    T.orig(i, cols) = sign[i] * row.b;
    if (sense[i] == RowSense::Le) {
      T.orig(i, slack) = 1.0;
      T.basis()[i] = slack++;
    } else {
      if (sense[i] == RowSense::Ge) T.orig(i, slack++) = -1.0;
      T.orig(i, art) = 1.0;
      T.basis()[i] = art++;
    }
  }
  T.load();

  LpSolution sol;
  // Phase 1: minimise the sum of artificials.
  if (n_art > 0) {
    std::vector<double> c1(cols, 0.0);
    std::fill(c1.begin() + art0, c1.end(), 1.0);
    T.set_costs(c1);
    const Step st = run(T, cols, opt, sol.pivots);
    if (st == Step::Limit) {
      sol.status = LpStatus::PivotLimit;
      return sol;
    }
    T.refactor();
    if (-T.cost(cols) > opt.feas_tol * (1.0 + bmax)) {
      sol.status = LpStatus::Infeasible;
      return sol;
    }
    // Drive zero-level artificials out of the basis where possible.
    for (int i = 0; i < m; ++i) {
      if (T.basis()[i] < art0) continue;
      int best = -1;
      for (int j = 0; j < art0; ++j) {
        if (std::abs(T.at(i, j)) > opt.pivot_tol && (best < 0 || std::abs(T.at(i, j)) > std::abs(T.at(i, best)))) best = j;
      }
      if (best >= 0) {
        T.pivot(i, best);
        ++sol.pivots;
      }
    }
  }

  // Phase 2 (artificial columns never re-enter).
  std::vector<double> c2(cols, 0.0);
  if (!lp.objective.empty()) std::copy(lp.objective.begin(), lp.objective.end(), c2.begin());
  T.set_costs(c2);
  if (!lp.objective.empty()) {
    const Step st = run(T, art0, opt, sol.pivots);
    if (st == Step::Limit) {
      sol.status = LpStatus::PivotLimit;
      return sol;
    }
    if (st == Step::Unbounded) {
      sol.status = LpStatus::Unbounded;
      return sol;
    }
  }
  T.refactor();

  sol.status = LpStatus::Optimal;
  sol.x.assign(n, 0.0);
  for (int i = 0; i < m; ++i) {
    const int b = T.basis()[i];
    if (b < n) sol.x[b] = std::max(0.0, T.rhs(i));
  }
  sol.objective = 0.0;
  if (!lp.objective.empty()) {
    for (int j = 0; j < n; ++j) sol.objective += lp.objective[j] * sol.x[j];
  }
  return sol;
}

}  // namespace sul
