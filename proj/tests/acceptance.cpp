// Acceptance gate: one PASS/FAIL line per criterion, with its runtime
// budget. Exit status 1 if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "sul/bounds.hpp"
#include "sul/optimize.hpp"
#include "sul/shift.hpp"
#include "sul/specialfn.hpp"
#include "sul/transform_check.hpp"

using namespace sul;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << " [failed: " << what << "]";
    }
  }
};

const double kInf = std::numeric_limits<double>::infinity();
const double kSqrt2 = std::sqrt(2.0);

void closed_form(Outcome& o) {
  double worst = 0.0;
  for (int d = 1; d <= 50; ++d) {
    const double got = thm3_lower(power_weight(d, 0.0), kInf, 1.0, 1.0);
    const double want = std::exp((log_gamma(0.5 * d + 1.0) - std::log(2.0)) / d) / std::sqrt(kPi);
    worst = std::max(worst, std::abs(got - want) / want);
  }
  const double d1 = thm3_lower(power_weight(1, 0.0), kInf, 1.0, 1.0);
  o.require(worst <= 1e-12, "relative error over d=1..50");
  o.require(std::abs(d1 - 0.25) <= 1e-12, "d=1 value");
  o.detail << "max rel err " << worst << ", d=1 -> " << d1;
}

void floor_constant(Outcome& o) {
  const double c = power_lower_floor(1) / std::sqrt(1.0 / (2.0 * kPi * std::exp(1.0)));
  o.require(std::abs(c - 0.8595) <= 5e-4, "c");
  o.detail << "c = " << c;
}

void thm1_witness(Outcome& o) {
  const Thm1Result t = thm1_upper(1, power_weight(12, 0.0));
  const double lower = bck_lower(12);
  o.require(t.regime == "f0", "regime");
  o.require(std::abs(lower - 0.92144) <= 1e-4, "lower");
  o.require(lower <= kSqrt2, "lower <= sqrt2");
  o.require(t.numeric >= kSqrt2 - 1e-9, "sqrt2 <= r");
  o.require(t.numeric <= t.analytic + 1e-9, "r <= analytic");
  o.require(t.analytic <= 1.57, "analytic <= 1.57");
  o.detail << "lower " << lower << " <= sqrt2 <= r(Pf0) " << t.numeric << " <= analytic " << t.analytic;
}

void vanishing(Outcome& o) {
  for (int d : {2, 4, 6}) {
    const Thm1Result t = thm1_upper(-1, power_weight(d, -0.5 * d));
    o.require(t.vanishing.size() == 3, "three radii");
    if (t.vanishing.size() != 3) return;
    const double r10 = t.vanishing[0].second, r100 = t.vanishing[1].second, r1000 = t.vanishing[2].second;
    o.require(r10 > r100 && r100 > r1000, "decreasing d=" + std::to_string(d));
    o.require(r1000 < 0.2, "r(1000) < 0.2 d=" + std::to_string(d));
    o.detail << "d=" << d << ": " << r10 << " > " << r100 << " > " << r1000 << "; ";
  }
  const double a1 = 1000.0;
  const double bound = std::sqrt(2.0 * std::log(a1) / (2.0 * kPi * (a1 - 1.0 / a1)));
  o.require(bound < 0.06, "analytic bound");
  o.detail << "analytic bound d=2 a1=1000: " << bound;
}

void suite(Outcome& o, const char* name) {
  const SuiteResult r = run_suite(name);
  o.require(r.passed, std::string(name) + " suite");
  o.detail << r.checks << " checks, max error " << r.max_error << " (tol " << r.tolerance << ")";
  for (const auto& f : r.failures) o.detail << "; " << f;
}

void optimizer(Outcome& o) {
  struct Inst {
    int s, d;
  };
  for (const Inst in : {Inst{1, 12}, Inst{-1, 8}, Inst{-1, 1}}) {
    const Weight w = power_weight(in.d, 0.0);
    const OptimizeResult r20 = bisect_upper_bound(in.s, w, 20);
    const OptimizeResult r40 = bisect_upper_bound(in.s, w, 40);
    const double sharp = *sharp_constant(in.s, in.d, 0);
    const double analytic = thm1_upper(in.s, w).analytic;
    const std::string tag = "(" + std::to_string(in.s) + "," + std::to_string(in.d) + ") ";
    o.require(r40.r_upper >= sharp - 1e-3, tag + "sharp floor");
    o.require(r40.r_upper <= analytic, tag + "analytic ceiling");
    o.require(r40.r_upper <= r20.r_upper + 1e-6, tag + "monotone in N");
    o.require(!r40.fallback, tag + "LP witness");
    if (const auto* f = std::get_if<LaguerreFunction>(&r40.witness)) {
      const Certification c = certify(*f, w);
      o.require(c.integral <= 1e-10 * c.coeff_norm, tag + "integral");
      o.require(c.radius.sign_at_infinity == 1, tag + "tail sign");
      o.require(c.radius.r == r40.r_upper, tag + "radius recomputed");
    }
    o.detail << tag << "r(20) " << r20.r_upper << " r(40) " << r40.r_upper << " gap " << r40.r_upper - sharp << "; ";
  }
}

void sign_law(Outcome& o) {
  int entries = 0;
  for (const SharpEntry& e : sharp_table()) {
    if (e.ell == 0) continue;
    ++entries;
    // exponent of -1 from the corollary, in integers
    const int r = e.ell % 2;
    const int num = r + e.ell + (e.base == 12 ? 0 : 2);
    const int want = (num / 2) % 2 == 0 ? 1 : -1;
    const int base_sign = (e.base == 12 ? 0 : 2) / 2 % 2 == 0 ? 1 : -1;
    o.require(num % 2 == 0, "integer exponent");
    o.require(e.s == want, "table sign base=" + std::to_string(e.base) + " l=" + std::to_string(e.ell));
    o.require(drop_record(e.base, e.ell, base_sign).sign_out == want, "drop law");
    o.require(e.d == e.base - 2 * e.ell, "dimension");
  }
  o.require(entries == 14, "14 entries");
  o.detail << entries << " entries";
}

void nazarov(Outcome& o) {
  const double q = 2.0, gamma = -0.5;
  const double alpha = gamma + (1.0 - 1.0 / q) - 0.3;
  const NazarovReport r = nazarov_demo(0.1, alpha, gamma, q, {10.0, 100.0, 1000.0});
  o.require(r.points.size() == 3 && r.points[2].ratio > r.points[0].ratio, "R(1000) > R(10)");
  for (const auto& p : r.points) o.detail << "R(" << p.t << ")=" << p.ratio << " ";
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double budget_s;
    std::function<void(Outcome&)> run;
  };
  const std::vector<Criterion> criteria = {
      {"closed-form constants", 1.0, closed_form},
      {"uniform floor constant c", 1.0, floor_constant},
      {"explicit witness d=12", 1.0, thm1_witness},
      {"vanishing regime", 1.0, vanishing},
      {"bochner suite", 30.0, [](Outcome& o) { suite(o, "bochner"); }},
      {"riesz identity", 5.0, [](Outcome& o) { suite(o, "riesz"); }},
      {"transport identities", 10.0, [](Outcome& o) { suite(o, "transport"); }},
      {"optimizer validity and floors", 600.0, optimizer},
      {"shifted sign law", 1.0, sign_law},
      {"oscillating bump demo", 60.0, nazarov},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[i].run(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.require(secs < criteria[i].budget_s, "runtime budget");
    if (!o.ok) ++failed;
    std::printf("%s %2zu %s (%.3f s / %.0f s): %s\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].name, secs,
                criteria[i].budget_s, o.detail.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
