#pragma once

// Special functions and quadrature rules shared by every other module.

#include <cstddef>
#include <vector>

namespace sul {

inline constexpr double kPi = 3.141592653589793238462643383279502884;

/// Nodes and weights of a generalized Gauss-Laguerre rule, i.e. a rule for
/// integrals of the form  int_0^inf  g(u) u^alpha e^{-u} du.
///
/// `log_weights` is kept alongside `weights` because for large n the weights
/// attached to the outermost nodes drop below the smallest normal double; the
/// log form stays finite and strictly ordered.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  std::vector<double> log_weights;
  double alpha = 0.0;

  std::size_t size() const noexcept { return nodes.size(); }
};

/// Plain Gauss-Legendre rule on [-1, 1].
struct LegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// ln Gamma(x) for x > 0. Throws std::domain_error otherwise.
double log_gamma(double x);

/// Gamma(x) for x > 0, via exp(log_gamma).
double gamma_fn(double x);

/// Generalized Laguerre polynomial L_k^{(alpha)}(u), standard normalisation
/// (L_k(0) = binom(k + alpha, k)). Three-term recurrence.
double laguerre_eval(int k, double alpha, double u);

/// All of L_0^{(alpha)}(u) ... L_kmax^{(alpha)}(u).
std::vector<double> laguerre_all(int kmax, double alpha, double u);

/// Volume of the unit ball in R^d.
double ball_volume(int d);

/// Surface area of the unit sphere S^{d-1} in R^d.
double sphere_area(int d);

/// Golub-Welsch nodes (implicit QL on the Jacobi matrix), Newton-polished,
/// with weights from the closed-form Christoffel expression. 1 <= n <= 256.
QuadratureRule gauss_laguerre_rule(int n, double alpha);

LegendreRule gauss_legendre_rule(int n);

/// Eigenvalues of a symmetric tridiagonal matrix plus the first component of
/// each normalised eigenvector (implicit QL with Wilkinson shifts). `diag`
/// has n entries, `offdiag` has n-1 entries (offdiag[i] couples i and i+1).
/// Eigenvalues are returned in ascending order.
struct TridiagonalEigen {
  std::vector<double> values;
  std::vector<double> first_components;
};
TridiagonalEigen tridiagonal_eigen(std::vector<double> diag, std::vector<double> offdiag);

}  // namespace sul
