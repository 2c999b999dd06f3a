// sul: command-line front end.
//
// Exit status: 0 when every assertion of the command passed, 1 when some
// assertion failed (the failures are listed under "failures"), 2 for usage
// or input errors, 3 for other runtime errors.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <limits>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "sul_io.hpp"

namespace {

using sul::io::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string out;
  std::string format = "json";
};

struct WeightArgs {
  int d = 1;
  double gamma = 0.0;
  std::string harmonic = "ONE";
  int ell = 0;
  bool sign_wrap = false;

  sul::Weight build() const {
    try {
      return sul::make_weight(d, {sul::harmonic_kind_from_string(harmonic), ell}, gamma, sign_wrap);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
};

// Assertions of one command; each failure becomes an entry in "failures".
struct Checks {
  json failures = json::array();
  void expect(bool ok, const std::string& name, json detail = nullptr) {
    if (!ok) failures.push_back({{"check", name}, {"detail", std::move(detail)}});
  }
  int exit_code() const { return failures.empty() ? 0 : 1; }
};

int thread_cap() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("SUL_THREADS")) {
    const int v = std::atoi(env);
    if (v >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(v));
  }
  return static_cast<int>(n);
}

// Runs body(i) for i in [0, n) on up to SUL_THREADS workers. Results are
// written by index, so aggregation order is deterministic.
template <class F>
void parallel_for(int n, F body) {
  const int workers = std::min(thread_cap(), n);
  if (workers <= 1) {
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex mu;
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (int i = next++; i < n; i = next++) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(mu);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

void emit(const Common& c, const std::string& text) {
  if (c.out.empty() || c.out == "-") {
    std::cout << text;
  } else {
    sul::io::write_atomic(c.out, text);
  }
}

int finish(const Common& c, const std::string& type, json body, const Checks& checks) {
  body["failures"] = checks.failures;
  body["passed"] = checks.failures.empty();
  emit(c, sul::io::dump(sul::io::document(type, std::move(body))));
  return checks.exit_code();
}

// "a..b" or "a,b,c" or a single integer.
std::vector<int> int_list(const std::string& spec) {
  std::vector<int> out;
  try {
    if (const auto dots = spec.find(".."); dots != std::string::npos) {
      const int a = std::stoi(spec.substr(0, dots));
      const int b = std::stoi(spec.substr(dots + 2));
      if (b < a) throw UsageError("empty range " + spec);
      for (int i = a; i <= b; ++i) out.push_back(i);
      return out;
    }
    std::stringstream ss(spec);
    for (std::string item; std::getline(ss, item, ',');) out.push_back(std::stoi(item));
  } catch (const std::logic_error&) {
    throw UsageError("cannot parse integer list '" + spec + "'");
  }
  return out;
}

std::vector<double> double_list(const std::string& spec) {
  std::vector<double> out;
  std::stringstream ss(spec);
  try {
    for (std::string item; std::getline(ss, item, ',');) out.push_back(std::stod(item));
  } catch (const std::logic_error&) {
    throw UsageError("cannot parse number list '" + spec + "'");
  }
  return out;
}

void check_sign(int s) {
  if (s != 1 && s != -1) throw UsageError("--s must be +1 or -1");
}

sul::io::AnyFunction load_function(const std::string& path) {
  if (path.empty()) throw UsageError("--in is required");
  const json j = sul::io::parse(sul::io::read_file(path));
  // A construct/shift report carries the function under "function".
  if (j.is_object() && !j.contains("kind") && j.contains("function")) return sul::io::function_from_json(j["function"]);
  return sul::io::function_from_json(j);
}

// ---- bounds ---------------------------------------------------------------

sul::BoundReport bound_report(int s, const sul::Weight& w) {
  if (w.is_radial() && !w.sign_wrap) return sul::corollary_power(s, w.d, w.gamma_r);
  sul::BoundReport rep;
  rep.s = s;
  rep.weight = w;
  const sul::Thm1Result up = sul::thm1_upper(s, w);
  rep.upper_analytic = up.analytic;
  rep.upper_numeric = up.numeric;
  rep.upper_method = "thm1_" + up.regime;
  if (w.harmonic.kind == sul::HarmonicKind::CoordinateProduct && w.gamma_r == 0.0 && !w.sign_wrap) {
    rep.sharp = sul::sharp_constant(s, w.d, w.harmonic.ell);
  }
  rep.lower_method = "none";
  rep.note = "lower bounds are only tabulated for power weights";
  return rep;
}

void check_report(Checks& checks, const sul::BoundReport& b) {
  const std::string tag = "s=" + std::to_string(b.s) + " d=" + std::to_string(b.weight.d);
  const double eps = 1e-12;
  if (b.lower && b.upper_analytic) checks.expect(*b.lower <= *b.upper_analytic + eps, "lower<=upper_analytic " + tag);
  if (b.lower && b.upper_numeric) checks.expect(*b.lower <= *b.upper_numeric + eps, "lower<=upper_numeric " + tag);
  if (b.sharp && b.lower) checks.expect(*b.lower <= *b.sharp + eps, "lower<=sharp " + tag);
  if (b.sharp && b.upper_numeric) checks.expect(*b.sharp <= *b.upper_numeric + eps, "sharp<=upper_numeric " + tag);
}

int cmd_bounds(const Common& c, int s, const WeightArgs& wa, const std::string& d_spec, bool sweep) {
  check_sign(s);
  Checks checks;
  if (!sweep) {
    WeightArgs one = wa;
    if (!d_spec.empty()) one.d = int_list(d_spec).at(0);
    const sul::BoundReport rep = bound_report(s, one.build());
    check_report(checks, rep);
    if (c.format == "csv") {
      emit(c, sul::io::sweep_csv({rep}));
      return checks.exit_code();
    }
    return finish(c, "bound_report", {{"report", sul::io::to_json(rep)}}, checks);
  }
  const std::vector<int> dims = int_list(d_spec.empty() ? std::to_string(wa.d) : d_spec);
  std::vector<sul::Weight> weights;
  for (int d : dims) {
    WeightArgs one = wa;
    one.d = d;
    weights.push_back(one.build());
  }
  std::vector<sul::BoundReport> rows(weights.size());
  parallel_for(static_cast<int>(rows.size()), [&](int i) { rows[i] = bound_report(s, weights[i]); });
  for (const auto& r : rows) check_report(checks, r);
  if (c.format == "csv") {
    emit(c, sul::io::sweep_csv(rows));
    for (const auto& f : checks.failures) std::cerr << f.dump() << "\n";
    return checks.exit_code();
  }
  json arr = json::array();
  for (const auto& r : rows) arr.push_back(sul::io::to_json(r));
  return finish(c, "bound_sweep", {{"reports", arr}}, checks);
}

// ---- radius ---------------------------------------------------------------

int cmd_radius(const Common& c, const std::string& in, double gamma, bool sign_wrap, double tol, double profile_rmax) {
  const sul::io::AnyFunction f = load_function(in);
  const auto [d, h] = std::visit([](const auto& g) { return std::pair{g.d, g.harmonic}; }, f);
  sul::Weight w;
  try {
    w = sul::make_weight(d, h, gamma, sign_wrap);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const sul::RadiusResult r = std::visit([&](const auto& g) { return sul::last_sign_change(g, w, tol); }, f);
  if (c.format == "csv") {
    const std::variant<sul::LaguerreFunction, sul::GaussianMixture> v =
        std::visit([](const auto& g) -> std::variant<sul::LaguerreFunction, sul::GaussianMixture> { return g; }, f);
    emit(c, sul::io::profile_csv(v, profile_rmax > 0 ? profile_rmax : std::max(1.0, 2.0 * r.certified_tail_from), 400));
    return 0;
  }
  const json fj = std::visit([](const auto& g) { return sul::io::to_json(g); }, f);
  return finish(c, "radius_result", {{"weight", sul::io::to_json(w)}, {"function", fj}, {"radius", sul::io::to_json(r)}},
                Checks{});
}

// ---- construct ------------------------------------------------------------

int cmd_construct(const Common& c, const std::string& kind, int s, const WeightArgs& wa, double a, double b, double t) {
  const sul::Weight w = wa.build();
  Checks checks;
  json body;
  sul::GaussianMixture f;
  if (kind == "thm1") {
    check_sign(s);
    const sul::Thm1Result r = sul::thm1_upper(s, w);
    f = r.witness;
    body["construction"] = sul::io::to_json(r);
    checks.expect(r.numeric <= r.analytic + 1e-9, "numeric<=analytic", {{"numeric", r.numeric}, {"analytic", r.analytic}});
  } else if (kind == "f0") {
    f = sul::build_f0(w, a > 0 ? a : 1.0 + 1.0 / std::sqrt(static_cast<double>(w.d)));
  } else if (kind == "g1") {
    f = sul::build_g1(w, a > 0 ? a : 10.0);
  } else if (kind == "f1") {
    if (!(a > 0 && b > 0)) throw UsageError("f1 needs --a and --b");
    f = sul::build_g1_h1_f1(w, a, b).f1;
  } else if (kind == "psi") {
    f = sul::build_psi_t(w, t > 0 ? t : 1.0).psi;
  } else {
    throw UsageError("unknown construction '" + kind + "' (thm1, f0, g1, f1, psi)");
  }
  const sul::RadiusResult r = sul::last_sign_change(f, w);
  body["weight"] = sul::io::to_json(w);
  body["function"] = sul::io::to_json(f);
  body["radius"] = sul::io::to_json(r);
  body["weighted_integral"] = sul::weighted_integral(f, w);
  return finish(c, "construction", body, checks);
}

// ---- shift ----------------------------------------------------------------

int cmd_shift(const Common& c, const std::string& in, const std::string& fn_out, bool do_lift, int ell, int d, int s,
              const std::string& harmonic) {
  check_sign(s);
  const sul::io::AnyFunction f = load_function(in);
  Checks checks;
  json body;
  json transformed;
  sul::ShiftRecord rec;
  if (do_lift) {
    const auto* g = std::get_if<sul::GaussianMixture>(&f);
    if (g == nullptr) throw UsageError("lift needs a gaussian mixture");
    if (d > 0 && g->d != d) throw UsageError("--d does not match the input function");
    if (ell >= 0 && g->harmonic.ell != ell) throw UsageError("--ell does not match the input function");
    const sul::GaussianMixture out = sul::lift(*g);
    rec = sul::lift_record(g->d, g->harmonic.ell, s);
    transformed = sul::io::to_json(out);
  } else {
    const int k = std::max(ell, 0);
    sul::HarmonicFactor h;
    try {
      h = {sul::harmonic_kind_from_string(harmonic), k};
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    const int src = std::visit([](const auto& g) { return g.d; }, f);
    if (d > 0 && src != d) throw UsageError("--d does not match the input function");
    transformed = std::visit([&](const auto& g) { return sul::io::to_json(sul::drop(g, h)); }, f);
    rec = sul::drop_record(src, k, s);
  }
  const bool law = do_lift ? sul::shifted_sign(rec.sign_out, rec.ell) == rec.sign_in
                           : sul::shifted_sign(rec.sign_in, rec.ell) == rec.sign_out;
  checks.expect(law, "sign_law");
  if (!fn_out.empty()) sul::io::write_atomic(fn_out, sul::io::dump(sul::io::document("function", transformed)));
  body["record"] = sul::io::to_json(rec);
  body["function"] = transformed;
  return finish(c, "shift", body, checks);
}

// ---- optimize -------------------------------------------------------------

int cmd_optimize(const Common& c, int s, const WeightArgs& wa, int N, double tol, int grid, const std::string& profile) {
  check_sign(s);
  if (N < 1) throw UsageError("--N must be positive");
  const sul::Weight w = wa.build();
  sul::LpOptions opt;
  opt.tolerance = tol;
  opt.grid_size = grid;
  sul::OptimizeResult r;
  try {
    r = sul::bisect_upper_bound(s, w, N, opt);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  Checks checks;
  const double radius = std::visit([&](const auto& g) { return sul::last_sign_change(g, w).value(); }, r.witness);
  checks.expect(std::abs(radius - r.r_upper) <= 1e-9 * (1.0 + r.r_upper), "witness_recertifies",
                {{"recomputed", radius}, {"reported", r.r_upper}});
  checks.expect(r.r_upper <= r.analytic_upper + 1e-9, "r_upper<=analytic", {{"analytic", r.analytic_upper}});
  if (!r.fallback) checks.expect(r.certification.integral_ok, "integral<=0", {{"integral", r.certification.integral}});
  std::optional<double> sharp;
  if (w.harmonic.kind != sul::HarmonicKind::PlaneHarmonic && w.gamma_r == 0.0 && !w.sign_wrap) {
    sharp = sul::sharp_constant(s, w.d, w.harmonic.ell);
  }
  if (sharp) checks.expect(r.r_upper >= *sharp - 1e-3, "r_upper>=sharp-1e-3", {{"sharp", *sharp}});
  if (!profile.empty()) {
    sul::io::write_atomic(profile, sul::io::profile_csv(r.witness, std::max(1.0, 2.0 * r.r_upper), 400));
  }
  json body = {{"s", s}, {"weight", sul::io::to_json(w)}, {"result", sul::io::to_json(r)}};
  body["sharp"] = sharp ? json(*sharp) : json(nullptr);
  if (sharp) body["gap"] = r.r_upper - *sharp;
  return finish(c, "optimize_result", body, checks);
}

// ---- verify ---------------------------------------------------------------

int cmd_verify(const Common& c, const std::string& suite, std::uint64_t seed) {
  std::vector<std::string> names;
  if (suite == "all") {
    names = sul::suite_names();
  } else {
    const auto all = sul::suite_names();
    if (std::find(all.begin(), all.end(), suite) == all.end()) throw UsageError("unknown suite '" + suite + "'");
    names = {suite};
  }
  std::vector<sul::SuiteResult> results(names.size());
  parallel_for(static_cast<int>(names.size()), [&](int i) { results[i] = sul::run_suite(names[i], seed); });
  Checks checks;
  json arr = json::array();
  for (const auto& r : results) {
    checks.expect(r.passed, "suite:" + r.name, r.failures);
    arr.push_back(sul::io::to_json(r));
  }
  return finish(c, "verify_report", {{"seed", seed}, {"suites", arr}}, checks);
}

// ---- demo-nazarov ---------------------------------------------------------

int cmd_nazarov(const Common& c, double delta, double gamma, double q, std::optional<double> alpha, const std::string& ts) {
  if (!(q > 1.0)) throw UsageError("--q must exceed 1");
  const double qp = std::isinf(q) ? 1.0 : q / (q - 1.0);
  const double a = alpha.value_or(gamma + 1.0 / qp - 0.3);
  const sul::NazarovReport r = sul::nazarov_demo(delta, a, gamma, q, double_list(ts));
  Checks checks;
  if (r.counterexample_regime) checks.expect(r.increasing, "ratio_increasing");
  return finish(c, "nazarov_demo", {{"report", sul::io::to_json(r)}}, checks);
}

void add_weight(CLI::App* cmd, WeightArgs& wa, bool with_d = true) {
  if (with_d) cmd->add_option("--d", wa.d, "Dimension")->check(CLI::PositiveNumber);
  cmd->add_option("--gamma", wa.gamma, "Radial exponent gamma_r of the weight");
  cmd->add_option("--harmonic", wa.harmonic, "ONE, COORDINATE_PRODUCT or PLANE_HARMONIC");
  cmd->add_option("--ell", wa.ell, "Degree of the harmonic factor");
  cmd->add_flag("--sign-wrap", wa.sign_wrap, "Use sgn(H) |x|^gamma_r");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical lab for sign uncertainty of the Fourier transform"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("-o,--out", common.out, "Output file (default: stdout)");
  app.add_option("--format", common.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  int s = 1;
  WeightArgs wa;
  std::string d_spec;
  bool sweep = false;
  auto* bounds = app.add_subcommand("bounds", "Lower/upper bounds and sharp constants");
  bounds->add_option("--s", s, "Eigenvalue sign, +1 or -1");
  bounds->add_option("--d", d_spec, "Dimension, or a range a..b / list with --sweep");
  add_weight(bounds, wa, false);
  bounds->add_flag("--sweep", sweep, "One row per dimension");

  std::string in;
  double tol = sul::kDefaultRadiusTol;
  double rmax = 0.0;
  auto* radius = app.add_subcommand("radius", "Last sign change of P f");
  radius->add_option("--in", in, "Function file")->required();
  radius->add_option("--gamma", wa.gamma, "Radial exponent gamma_r of the weight");
  radius->add_flag("--sign-wrap", wa.sign_wrap, "Use sgn(H) |x|^gamma_r");
  radius->add_option("--tolerance", tol, "Bracket width");
  radius->add_option("--rmax", rmax, "Profile range for --format csv");

  std::string kind = "thm1";
  double a = 0.0, b = 0.0, t = 0.0;
  auto* construct = app.add_subcommand("construct", "Explicit constructions");
  construct->add_option("--kind", kind, "thm1, f0, g1, f1 or psi");
  construct->add_option("--s", s, "Eigenvalue sign (thm1)");
  add_weight(construct, wa);
  construct->add_option("--a", a, "a0 or a1");
  construct->add_option("--b", b, "b1");
  construct->add_option("--t", t, "psi parameter");

  bool lift = false, drop = false;
  int ell = -1, d = 0;
  std::string fn_out;
  std::string harmonic = "COORDINATE_PRODUCT";
  auto* shift = app.add_subcommand("shift", "Dimension shift (lift / drop)");
  shift->add_option("--in", in, "Function file")->required();
  shift->add_flag("--lift", lift, "d -> d + 2 ell");
  shift->add_flag("--drop", drop, "d + 2 ell -> d");
  shift->add_option("--ell", ell, "Shift degree");
  shift->add_option("--d", d, "Dimension of the input function (checked)");
  shift->add_option("--s", s, "Sign of the input problem");
  shift->add_option("--harmonic", harmonic, "Harmonic factor inserted by --drop");
  shift->add_option("--function-out", fn_out, "Write the transformed function here");

  int N = 40, grid = 0;
  double otol = 1e-4;
  std::string profile;
  auto* optimize = app.add_subcommand("optimize", "LP bisection for a numerical upper bound");
  optimize->add_option("--s", s, "Eigenvalue sign");
  add_weight(optimize, wa);
  optimize->add_option("--N", N, "Number of basis functions");
  optimize->add_option("--tolerance", otol, "Bisection tolerance in r (>= 1e-4)");
  optimize->add_option("--grid", grid, "Grid size (0: 10 N)");
  optimize->add_option("--profile-csv", profile, "Write witness radial profile samples");

  std::string suite = "all";
  std::uint64_t seed = 20240611;
  auto* verify = app.add_subcommand("verify", "Cross-module invariant suites");
  verify->add_option("--suite", suite, "Suite name or all");
  verify->add_option("--seed", seed, "RNG seed");

  double delta = 0.1, ngamma = -0.5, q = 2.0;
  std::optional<double> alpha;
  std::string ts = "10,100,1000";
  auto* nazarov = app.add_subcommand("demo-nazarov", "Ratio blow-up below the admissibility threshold");
  nazarov->add_option("--delta", delta);
  nazarov->add_option("--gamma", ngamma);
  nazarov->add_option("--q", q);
  nazarov->add_option("--alpha", alpha, "Default gamma + 1/q' - 0.3");
  nazarov->add_option("--t", ts, "Comma-separated frequencies");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    const bool csv = common.format == "csv";
    if (csv && !(bounds->parsed() || radius->parsed())) throw UsageError("--format csv is only available for bounds and radius");
    if (bounds->parsed()) return cmd_bounds(common, s, wa, d_spec, sweep);
    if (radius->parsed()) return cmd_radius(common, in, wa.gamma, wa.sign_wrap, tol, rmax);
    if (construct->parsed()) return cmd_construct(common, kind, s, wa, a, b, t);
    if (shift->parsed()) {
      if (lift == drop) throw UsageError("give exactly one of --lift or --drop");
      return cmd_shift(common, in, fn_out, lift, ell, d, s, harmonic);
    }
    if (optimize->parsed()) return cmd_optimize(common, s, wa, N, otol, grid, profile);
    if (verify->parsed()) return cmd_verify(common, suite, seed);
    if (nazarov->parsed()) return cmd_nazarov(common, delta, ngamma, q, alpha, ts);
  } catch (const UsageError& e) {
    std::cerr << "sul: " << e.what() << "\n";
    return 2;
  } catch (const sul::io::ParseError& e) {
    std::cerr << "sul: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "sul: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "sul: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
