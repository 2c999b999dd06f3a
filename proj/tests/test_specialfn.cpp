#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "sul/specialfn.hpp"

using namespace sul;

TEST_CASE("log_gamma at known points") {
  CHECK(log_gamma(1.0) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(log_gamma(0.5) == doctest::Approx(0.5 * std::log(kPi)).epsilon(1e-13));
  CHECK(log_gamma(7.0) == doctest::Approx(std::log(720.0)).epsilon(1e-13));
  CHECK_THROWS_AS(log_gamma(0.0), std::domain_error);
  CHECK_THROWS_AS(log_gamma(-1.5), std::domain_error);
}

TEST_CASE("log_gamma agrees with std::lgamma and the recurrence") {
  for (double x = 0.1; x <= 50.0; x += 0.173) {
    CHECK(std::abs(log_gamma(x + 1.0) - log_gamma(x) - std::log(x)) <= 1e-13 * std::max(1.0, std::abs(log_gamma(x + 1.0))));
    CHECK(log_gamma(x) == doctest::Approx(std::lgamma(x)).epsilon(1e-13));
  }
}

TEST_CASE("laguerre_eval closed forms") {
  for (double u : {0.0, 0.3, 2.0, 17.0}) {
    CHECK(laguerre_eval(0, 1.7, u) == 1.0);
    CHECK(laguerre_eval(1, 1.7, u) == doctest::Approx(2.7 - u).epsilon(1e-15));
  }
  CHECK(laguerre_eval(2, 0.0, 1.0) == doctest::Approx(-0.5).epsilon(1e-15));
  CHECK_THROWS_AS(laguerre_eval(3, -1.0, 1.0), std::domain_error);
  // L_k^{(alpha)}(0) = binom(k + alpha, k)
  CHECK(laguerre_eval(10, 0.5, 0.0) == doctest::Approx(std::exp(log_gamma(11.5) - log_gamma(1.5) - log_gamma(11.0))).epsilon(1e-13));
}

TEST_CASE("laguerre three-term recurrence holds pointwise") {
  for (double alpha : {-0.5, 0.0, 2.5, 7.0}) {
    for (double u = 0.0; u <= 100.0; u += 3.7) {
      const auto L = laguerre_all(40, alpha, u);
      for (int k = 1; k < 40; ++k) {
        const double lhs = (k + 1) * L[k + 1];
        const double rhs = (2 * k + 1 + alpha - u) * L[k] - (k + alpha) * L[k - 1];
        const double scale = std::abs((2 * k + 1 + alpha - u) * L[k]) + std::abs((k + alpha) * L[k - 1]);
        CHECK(std::abs(lhs - rhs) <= 1e-12 * scale + 1e-300);
      }
      CHECK(L[17] == doctest::Approx(laguerre_eval(17, alpha, u)).epsilon(1e-14));
    }
  }
}

TEST_CASE("ball volume and sphere area") {
  CHECK(ball_volume(1) == doctest::Approx(2.0));
  CHECK(ball_volume(2) == doctest::Approx(kPi));
  CHECK(ball_volume(12) == doctest::Approx(std::pow(kPi, 6) / 720.0).epsilon(1e-13));
  for (int d = 1; d <= 30; ++d) CHECK(sphere_area(d) == doctest::Approx(d * ball_volume(d)).epsilon(1e-13));
}

TEST_CASE("small Gauss-Laguerre rules") {
  const auto r1 = gauss_laguerre_rule(1, 0.0);
  REQUIRE(r1.size() == 1);
  CHECK(r1.nodes[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(r1.weights[0] == doctest::Approx(1.0).epsilon(1e-14));
  const auto r2 = gauss_laguerre_rule(2, 0.0);
  CHECK(r2.nodes[0] == doctest::Approx(2.0 - std::sqrt(2.0)).epsilon(1e-14));
  CHECK(r2.nodes[1] == doctest::Approx(2.0 + std::sqrt(2.0)).epsilon(1e-14));
  CHECK(r2.weights[0] * r2.nodes[0] + r2.weights[1] * r2.nodes[1] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK_THROWS_AS(gauss_laguerre_rule(4, -1.0), std::domain_error);
  CHECK_THROWS(gauss_laguerre_rule(0, 0.0));
  CHECK_THROWS(gauss_laguerre_rule(257, 0.0));
}

TEST_CASE("Gauss-Laguerre exactness on monomials") {
  for (double alpha : {-0.5, 0.0, 0.5, 3.5}) {
    for (int n = 1; n <= 64; n += (n < 8 ? 1 : 7)) {
      const auto rule = gauss_laguerre_rule(n, alpha);
      REQUIRE(rule.size() == static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) {
        CHECK(rule.weights[i] >= 0.0);
        if (i > 0) CHECK(rule.nodes[i] > rule.nodes[i - 1]);
      }
      for (int k = 0; k <= 2 * n - 1; ++k) {
        // Sum in log space: w_i u_i^k overflows for large k otherwise.
        const double exact = log_gamma(k + alpha + 1.0);
        double sum = 0.0;
        for (int i = 0; i < n; ++i) sum += std::exp(rule.log_weights[i] + k * std::log(rule.nodes[i]) - exact);
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-11));
      }
    }
  }
}

TEST_CASE("Gauss-Legendre integrates polynomials on [-1, 1]") {
  const auto rule = gauss_legendre_rule(10);
  for (int k = 0; k <= 19; ++k) {
    double s = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) s += rule.weights[i] * std::pow(rule.nodes[i], k);
    const double exact = k % 2 ? 0.0 : 2.0 / (k + 1);
    CHECK(s == doctest::Approx(exact).epsilon(1e-14).scale(1.0));
  }
}

TEST_CASE("tridiagonal eigen solver on a 2x2") {
  const auto e = tridiagonal_eigen({2.0, 2.0}, {1.0});
  REQUIRE(e.values.size() == 2);
  CHECK(e.values[0] == doctest::Approx(1.0));
  CHECK(e.values[1] == doctest::Approx(3.0));
  CHECK(e.first_components[0] * e.first_components[0] == doctest::Approx(0.5));
}
