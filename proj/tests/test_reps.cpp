#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>
#include <vector>

#include "sul/reps.hpp"
#include "sul/specialfn.hpp"
#include "sul/transform_check.hpp"

using namespace sul;

namespace {

GaussianMixture random_mixture(std::mt19937_64& rng, int d, HarmonicFactor h, int terms = 3) {
  std::uniform_real_distribution<double> c(-2.0, 2.0), la(std::log(0.3), std::log(4.0));
  std::vector<GaussianTerm> t;
  for (int j = 0; j < terms; ++j) t.push_back({c(rng), std::exp(la(rng))});
  return make_mixture(d, h, t);
}

// int f over R^1 times e^{-2 pi i x xi}, composite Simpson on [-L, L]; an
// oracle written independently of the library's quadrature.
std::complex<double> simpson_fourier_1d(const GaussianMixture& f, double xi) {
  const int n = 40000;
  const double L = 12.0, h = 2 * L / n;
  std::complex<double> s = 0.0;
  for (int i = 0; i <= n; ++i) {
    const double x = -L + i * h;
    const double w = (i == 0 || i == n) ? 1.0 : (i % 2 ? 4.0 : 2.0);
    const double xs[] = {x};
    s += w * evaluate_function(f, xs) * std::polar(1.0, -2.0 * kPi * x * xi);
  }
  return s * h / 3.0;
}

double mixture_abs_scale(const GaussianMixture& f, const Weight& w) {
  double s = 0.0;
  for (const auto& t : f.terms) s += std::abs(weighted_integral(make_mixture(f.d, f.harmonic, {{t.c, t.a}}), w));
  return s;
}

}  // namespace

TEST_CASE("mixture validation") {
  CHECK_THROWS_AS(make_mixture(2, HarmonicFactor::one(), {{1.0, 1.0}, {2.0, 1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(make_mixture(2, HarmonicFactor::one(), {{1.0, -1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(make_mixture(2, HarmonicFactor::one(), {{0.0, 1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(make_mixture(1, HarmonicFactor::coordinate_product(2), {{1.0, 1.0}}), std::invalid_argument);
}

TEST_CASE("fourier transform examples") {
  const auto g = fourier_transform(make_mixture(5, HarmonicFactor::one(), {{1.0, 1.0}}));
  CHECK(g.phase == UnitPhase::from_power(0));
  CHECK(g.mixture.terms[0].c == doctest::Approx(1.0));
  CHECK(g.mixture.terms[0].a == doctest::Approx(1.0));
  const auto o = fourier_transform(make_mixture(1, HarmonicFactor::coordinate_product(1), {{1.0, 1.0}}));
  CHECK(o.phase == UnitPhase::from_power(3));  // -i
  CHECK(o.mixture.terms[0].c == doctest::Approx(1.0));
  const auto w = fourier_transform(make_mixture(2, HarmonicFactor::one(), {{1.0, 4.0}}));
  CHECK(w.mixture.terms[0].c == doctest::Approx(0.25));
  CHECK(w.mixture.terms[0].a == doctest::Approx(0.25));
}

TEST_CASE("fourier transform applied twice is reflection") {
  std::mt19937_64 rng(3);
  for (int d = 1; d <= 6; ++d) {
    for (int ell = 0; ell <= std::min(d, 3); ++ell) {
      const HarmonicFactor h = ell ? HarmonicFactor::coordinate_product(ell) : HarmonicFactor::one();
      const GaussianMixture f = random_mixture(rng, d, h);
      const PhasedMixture once = fourier_transform(f);
      const PhasedMixture twice = fourier_transform(once.mixture);
      CHECK((once.phase * twice.phase) == UnitPhase::from_sign(ell % 2 ? -1 : 1));
      for (std::size_t j = 0; j < f.terms.size(); ++j) {
        CHECK(twice.mixture.terms[j].c == doctest::Approx(f.terms[j].c).epsilon(1e-14));
        CHECK(twice.mixture.terms[j].a == doctest::Approx(f.terms[j].a).epsilon(1e-15));
      }
    }
  }
}

TEST_CASE("closed-form transform matches quadrature") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  int count = 0;
  for (int rep = 0; rep < 20; ++rep) {
    const int d = 1 + rep % 3;
    HarmonicFactor h = HarmonicFactor::one();
    if (d == 1 && rep % 2) h = HarmonicFactor::coordinate_product(1);
    if (d == 2 && rep % 2) h = HarmonicFactor::plane(2);
    const GaussianMixture f = random_mixture(rng, d, h);
    const PhasedMixture F = fourier_transform(f);
    const std::complex<double> phase = std::pow(std::complex<double>(0.0, 1.0), F.phase.power);
    for (int k = 0; k < 10; ++k) {
      std::vector<double> xi(d);
      for (double& v : xi) v = u(rng);
      const std::complex<double> closed = phase * evaluate_function(F.mixture, xi);
      CHECK(std::abs(numeric_fourier(f, xi) - closed) <= 1e-7);
      ++count;
    }
  }
  CHECK(count == 200);
}

TEST_CASE("independent 1-D oracle agrees with the library oracle") {
  std::mt19937_64 rng(9);
  const GaussianMixture f = random_mixture(rng, 1, HarmonicFactor::coordinate_product(1));
  for (double xi : {0.0, 0.37, -1.2}) {
    const double x[] = {xi};
    CHECK(std::abs(simpson_fourier_1d(f, xi) - numeric_fourier(f, x)) <= 1e-9);
  }
}

TEST_CASE("eigen status") {
  const Weight w12 = power_weight(12, 0.0);
  const EigenStatus e0 = eigen_status(build_f0(w12, 1.0 + 1.0 / std::sqrt(12.0)));
  REQUIRE(e0.is_eigen);
  CHECK(*e0.eigenvalue == UnitPhase::from_sign(1));
  CHECK_FALSE(eigen_status(make_mixture(3, HarmonicFactor::one(), {{1.0, 2.0}})).is_eigen);
  const EigenStatus e1 = eigen_status(build_g1(power_weight(1, 0.0), 2.0));
  REQUIRE(e1.is_eigen);
  CHECK(*e1.eigenvalue == UnitPhase::from_sign(-1));
  // H = x_1 picks up (-i): f0 then has eigenvalue -i.
  const EigenStatus e2 = eigen_status(build_f0(make_weight(3, HarmonicFactor::coordinate_product(1), 0.0), 1.5));
  REQUIRE(e2.is_eigen);
  CHECK(*e2.eigenvalue == UnitPhase::from_power(3));
}

TEST_CASE("f0 construction") {
  CHECK(f0_amplitude(power_weight(12, 0.0), 2.0) == doctest::Approx(65.0));
  CHECK(f0_amplitude(power_weight(7, 0.0), 1.0 + 1e-9) == doctest::Approx(2.0).epsilon(1e-7));
  CHECK_THROWS_AS(build_f0(power_weight(2, 0.0), 1.0), std::invalid_argument);
  const GaussianMixture f = build_f0(power_weight(12, 0.0), 2.0);
  CHECK(evaluate_radial_profile(f, 0.0) == doctest::Approx(0.0).scale(65.0).epsilon(1e-14));
  const GaussianMixture fh = build_f0(make_weight(3, HarmonicFactor::coordinate_product(2), 0.0), 2.0);
  const double origin[] = {0.0, 0.0, 0.0};
  CHECK(evaluate_function(fh, origin) == 0.0);
  for (const Weight& w : {power_weight(12, 0.0), power_weight(3, 1.5), make_weight(4, HarmonicFactor::coordinate_product(2), 0.5),
                          make_weight(3, HarmonicFactor::coordinate_product(1), 0.25, true)}) {
    const GaussianMixture g = build_f0(w, 1.7);
    CHECK(std::abs(weighted_integral(g, w)) <= 1e-10 * mixture_abs_scale(g, w));
  }
}

TEST_CASE("g1, h1, f1 construction") {
  const Weight w1 = power_weight(1, 0.0);
  CHECK(f1_amplitude(w1, 4.0, 2.0) == doctest::Approx(1.0 + std::sqrt(2.0)).epsilon(1e-14));
  CHECK_THROWS_AS(build_g1_h1_f1(w1, 2.0, 4.0), std::invalid_argument);
  for (const Weight& w : {power_weight(1, 0.0), power_weight(8, 0.0), power_weight(5, 1.3), power_weight(6, -2.0),
                          make_weight(4, HarmonicFactor::coordinate_product(2), 0.0)}) {
    const double g = w.gamma_total();
    const double rho = std::max(w.d + w.harmonic.ell + g, w.harmonic.ell - g);
    for (auto [a1, b1] : {std::pair{4.0, 2.0}, std::pair{3.0, 1.5}, std::pair{50.0, 10.0}}) {
      const F1Family fam = build_g1_h1_f1(w, a1, b1);
      CHECK(std::abs(weighted_integral(fam.f1, w)) <= 1e-10 * mixture_abs_scale(fam.f1, w));
      if (w.d + 2 * g > 0) {
        CHECK(fam.amplitude >= 1.0 - 1e-12);
        CHECK(fam.amplitude <= std::pow(a1 / b1, rho / 2) * std::log(a1) / std::log(b1) * (1 + 1e-12));
      }
    }
  }
  // d + 2 gamma <= 0 makes int P g1 <= 0.
  const Weight wv = power_weight(4, -2.5);
  CHECK(weighted_integral(build_g1(wv, 10.0), wv) <= 1e-12);
  const Weight wz = power_weight(4, -2.0);
  const GaussianMixture gz = build_g1(wz, 10.0);
  CHECK(std::abs(weighted_integral(gz, wz)) <= 1e-12 * mixture_abs_scale(gz, wz));
}

TEST_CASE("psi_t construction") {
  const Weight w = power_weight(3, 1.0);
  for (double t : {0.5, 1.0, 3.0}) {
    const PsiPair p = build_psi_t(w, t);
    CHECK(weighted_integral(p.psi, w) > 0.0);
    const GaussianMixture& Fm = p.transform.mixture;
    CHECK(std::abs(weighted_integral(Fm, w)) <= 1e-10 * mixture_abs_scale(Fm, w));
    const double R = p.sign_change_radius;
    CHECK(std::sqrt((3 + 1.0) * t * std::log(2.0) / kPi) == doctest::Approx(R));
    for (double f : {1.0001, 1.5, 3.0}) CHECK(evaluate_radial_profile(Fm, f * R) < 0.0);
    CHECK(evaluate_radial_profile(Fm, 0.9 * R) > 0.0);
  }
  CHECK_THROWS_AS(build_psi_t(make_weight(2, HarmonicFactor::coordinate_product(2), 1.0, true), 1.0), std::invalid_argument);
  const PsiPair eq = build_psi_t(make_weight(2, HarmonicFactor::coordinate_product(1), 0.0), 1.0);
  for (double r : {0.01, 0.5, 2.0}) CHECK(evaluate_radial_profile(eq.psi, r) > 0.0);
}

TEST_CASE("weighted integral closed forms") {
  for (int d = 1; d <= 4; ++d) {
    const HarmonicFactor h = HarmonicFactor::coordinate_product(1);
    const Weight w = make_weight(d, h, 0.0);
    const double m = d + 2.0;
    const double expect = sphere_moment(w) * std::exp(log_gamma(m / 2)) / (2.0 * std::pow(kPi, m / 2));
    CHECK(weighted_integral(make_mixture(d, h, {{1.0, 1.0}}), w) == doctest::Approx(expect).epsilon(1e-13));
  }
}

TEST_CASE("weighted integral matches brute quadrature") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> g(-0.9, 6.0);
  for (int rep = 0; rep < 30; ++rep) {
    const int d = 1 + rep % 6;
    const int ell = rep % 3 == 0 ? 0 : std::min(d, 1 + rep % 2);
    const HarmonicFactor h = ell ? HarmonicFactor::coordinate_product(ell) : HarmonicFactor::one();
    const Weight w = make_weight(d, h, g(rng) * (d > 1 ? 1.0 : 0.5));
    const GaussianMixture f = random_mixture(rng, d, h, 4);
    const double closed = weighted_integral(f, w);
    CHECK(brute_weighted_integral(f, w) == doctest::Approx(closed).epsilon(1e-9).scale(mixture_abs_scale(f, w)));
    std::vector<double> c(9);
    for (double& v : c) v = std::uniform_real_distribution<double>(-1, 1)(rng);
    const LaguerreFunction L = make_laguerre(d, h, c);
    CHECK(brute_weighted_integral(L, w) == doctest::Approx(weighted_integral(L, w)).epsilon(1e-9).scale(1.0));
  }
}

TEST_CASE("scaling covariance of the weighted integral") {
  std::mt19937_64 rng(17);
  for (const Weight& w : {power_weight(3, 1.4), power_weight(2, -0.7), make_weight(4, HarmonicFactor::coordinate_product(2), 0.6)}) {
    const GaussianMixture f = random_mixture(rng, w.d, w.harmonic);
    const double base = weighted_integral(f, w);
    for (double delta : {0.5, 2.0, 3.3}) {
      const double expect = std::pow(delta, -w.d - w.gamma_total()) * base;
      CHECK(weighted_integral(dilate(f, delta), w) == doctest::Approx(expect).epsilon(1e-10));
    }
  }
}

TEST_CASE("Riesz identity on eigenfunction mixtures") {
  std::mt19937_64 rng(19);
  std::uniform_real_distribution<double> c(-1, 1), la(0.0, std::log(5.0));
  for (auto [d, gamma] : {std::pair{2, -1.0}, std::pair{3, -1.5}, std::pair{4, -2.5}, std::pair{5, -0.4}}) {
    for (int s : {1, -1}) {
      // a and 1/a paired with c a^{-d/2}: f^ = s f.
      std::vector<GaussianTerm> t;
      for (int j = 0; j < 2; ++j) {
        const double a = std::exp(la(rng)) + 0.05 * j;
        const double cj = c(rng);
        t.push_back({cj, a});
        t.push_back({s * cj * std::pow(a, -0.5 * d), 1.0 / a});
      }
      const GaussianMixture f = make_mixture(d, HarmonicFactor::one(), t);
      const PhasedMixture F = fourier_transform(f);
      const double lhs = std::exp(log_gamma((d + gamma) / 2)) * std::pow(kPi, -(d + gamma) / 2) *
                         weighted_integral(F.mixture, power_weight(d, -d - gamma));
      const double rhs = std::exp(log_gamma(-gamma / 2)) * std::pow(kPi, gamma / 2) * weighted_integral(f, power_weight(d, gamma));
      const double scale = mixture_abs_scale(f, power_weight(d, gamma)) * std::exp(log_gamma(-gamma / 2)) * std::pow(kPi, gamma / 2);
      CHECK(std::abs(lhs - rhs) <= 1e-9 * scale);
    }
  }
}

TEST_CASE("pointwise evaluation") {
  const GaussianMixture g = make_mixture(2, HarmonicFactor::one(), {{1.0, 1.0}});
  CHECK(evaluate_radial_profile(g, 1.0) == doctest::Approx(std::exp(-kPi)));
  const double x[] = {0.6, 0.8};
  CHECK(evaluate_function(g, x) == doctest::Approx(std::exp(-kPi)));
  const LaguerreFunction L = make_laguerre(2, HarmonicFactor::one(), {0.0, 1.0});
  // L_1^{(0)}(u) = 1 - u with u = 2 pi r^2.
  CHECK(evaluate_radial_profile(L, 0.5) == doctest::Approx((1 - kPi / 2) * std::exp(-kPi / 4)));
  CHECK(L.degree() == 1);
  CHECK_THROWS(evaluate_function(g, std::vector<double>{1.0}));
}
