#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace subcrank {

/// Grünwald–Letnikov weights for a fixed fractional order: the Taylor
/// coefficients of (1 - z)^alpha, i.e. the kernel of the discrete
/// fractional derivative tau^{-alpha} * sum_j sigma_j * u(t - j*tau).
struct GLWeights {
  double alpha = 0.0;
  std::vector<double> sigma;  // sigma[0..n]
};

/// Computes sigma_0..sigma_n by the forward recursion
/// sigma_0 = 1, sigma_j = (1 - (alpha+1)/j) * sigma_{j-1}.
/// Requires 0 < alpha < 1.
GLWeights gl_weights(double alpha, std::size_t n);

/// Second-order BDF difference (3/2 g_n - 2 g_{n-1} + 1/2 g_{n-2}) / tau.
/// Callers supply 0 for entries with index below zero (zero extension).
double bdf2_diff(double g_n, double g_nm1, double g_nm2, double tau);

/// Discrete BDF2 derivative of t^{2-alpha} / Gamma(3-alpha) at t_n = n*tau,
/// with t_k^{2-alpha} := 0 for k < 0. This is the time factor multiplying
/// the projected initial datum on the scheme right-hand side. Requires n >= 1.
double initial_coeff(int n, double alpha, double tau);

/// Generating symbols of the time discretization.
/// omega1(z) = (1 - z) / tau                              (backward Euler)
/// omega2(z) = (3/2 - 2z + z^2/2) / tau                   (BDF2)
/// omega_cn(z) = (1 - z) / (tau * (1 - a/2 + a/2 z)^{1/a}) (fractional CN)
/// omega_cn uses the principal branch; evaluation with the base on the
/// closed negative real axis throws DomainError.
std::complex<double> omega1(std::complex<double> z, double tau);
std::complex<double> omega2(std::complex<double> z, double tau);
std::complex<double> omega_cn(std::complex<double> z, double tau, double alpha);

/// Gamma function for x > 0, accurate to at least 12 significant digits
/// on the arguments the schemes use (Lanczos approximation).
double gamma_fn(double x);

/// Validated (alpha, tau) pair with the symbols attached.
struct SymbolConfig {
  double alpha;
  double tau;

  SymbolConfig(double alpha, double tau);

  std::complex<double> w1(std::complex<double> z) const { return omega1(z, tau); }
  std::complex<double> w2(std::complex<double> z) const { return omega2(z, tau); }
  std::complex<double> w(std::complex<double> z) const { return omega_cn(z, tau, alpha); }
};

}  // namespace subcrank
