#pragma once

// Dense two-phase tableau simplex; Dantzig pricing with Bland's rule as the
// anti-cycling fallback.
//
//   minimise c.x  subject to  rows (<=, =, >=) and x >= 0.
//
// Small and deterministic by design: no presolve, no scaling. The tableau is
// rebuilt from the original rows every 100 pivots and after each phase.

#include <cstdint>
#include <string_view>
#include <vector>

namespace sul {

enum class RowSense { Le, Eq, Ge };

struct LpRow {
  std::vector<double> a;
  RowSense sense = RowSense::Le;
  double b = 0.0;
};

struct LinearProgram {
  int num_vars = 0;
  std::vector<double> objective;  // empty: pure feasibility
  std::vector<LpRow> rows;

  void add_row(std::vector<double> a, RowSense sense, double b);
};

enum class LpStatus { Optimal, Infeasible, Unbounded, PivotLimit };

std::string_view to_string(LpStatus s);

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  std::vector<double> x;
  double objective = 0.0;
  std::int64_t pivots = 0;
};

struct SimplexOptions {
  double pivot_tol = 1e-10;
  double feas_tol = 1e-9;
  std::int64_t max_pivots = 1'000'000;
};

LpSolution solve_lp(const LinearProgram& lp, const SimplexOptions& opt = {});

}  // namespace sul
