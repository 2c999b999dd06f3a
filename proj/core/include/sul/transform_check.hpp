#pragma once

// Brute-force oracles (direct quadrature of the transform and of the weighted
// integral) and the cross-module invariant suites built on them.

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sul/reps.hpp"
#include "sul/weights.hpp"

namespace sul {

/// int f(x) e^{-2 pi i x.xi} dx by direct quadrature. d = 1, 2 take any
/// harmonic factor (d = 2 in polar coordinates); d = 3 only radial f, via the
/// Hankel reduction.
std::complex<double> numeric_fourier(const GaussianMixture& f, std::span<const double> xi);

/// int P f by composite Gauss-Legendre in r on a graded mesh, times the
/// angular factor. Independent of the Gauss-Laguerre closed forms.
double brute_weighted_integral(const GaussianMixture& f, const Weight& w);
double brute_weighted_integral(const LaguerreFunction& f, const Weight& w);

struct SuiteResult {
  std::string name;
  bool passed = true;
  int checks = 0;
  double max_error = 0.0;
  double tolerance = 0.0;
  std::vector<std::string> failures;
  std::vector<std::string> notes;
};

/// Names accepted by run_suite.
std::vector<std::string> suite_names();

/// "bochner", "fourier", "integral", "riesz", "transport", "dilation".
/// Deterministic for a given seed. Throws std::invalid_argument on an unknown name.
SuiteResult run_suite(std::string_view name, std::uint64_t seed = 20240611);

}  // namespace sul
