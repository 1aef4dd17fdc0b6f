#include "subcrank/kernels.hpp"

#include <cmath>
#include <string>

#include "subcrank/errors.hpp"

namespace subcrank {

namespace {

void check_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw ParameterError("fractional order alpha must lie in (0, 1), got " +
                         std::to_string(alpha));
  }
}

void check_tau(double tau) {
  if (!(tau > 0.0)) {
    throw ParameterError("step size tau must be positive, got " +
                         std::to_string(tau));
  }
}

}  // namespace

GLWeights gl_weights(double alpha, std::size_t n) {
  check_alpha(alpha);
  GLWeights w;
  w.alpha = alpha;
  w.sigma.resize(n + 1);
  w.sigma[0] = 1.0;
  // Each factor lies in (-alpha, 1), so the recursion is forward stable.
  for (std::size_t j = 1; j <= n; ++j) {
    w.sigma[j] = (1.0 - (alpha + 1.0) / static_cast<double>(j)) * w.sigma[j - 1];
  }
  return w;
}

double bdf2_diff(double g_n, double g_nm1, double g_nm2, double tau) {
  check_tau(tau);
  return (1.5 * g_n - 2.0 * g_nm1 + 0.5 * g_nm2) / tau;
}

double initial_coeff(int n, double alpha, double tau) {
  if (n <= 0) {
    throw ParameterError("initial_coeff requires a step index n >= 1, got " +
                         std::to_string(n));
  }
  check_alpha(alpha);
  check_tau(tau);
  const double expo = 2.0 - alpha;
  auto t_pow = [&](int k) {
    return k < 0 ? 0.0 : std::pow(static_cast<double>(k) * tau, expo);
  };
  return bdf2_diff(t_pow(n), t_pow(n - 1), t_pow(n - 2), tau) / gamma_fn(3.0 - alpha);
}

std::complex<double> omega1(std::complex<double> z, double tau) {
  check_tau(tau);
  return (1.0 - z) / tau;
}

std::complex<double> omega2(std::complex<double> z, double tau) {
  check_tau(tau);
  return (1.5 - 2.0 * z + 0.5 * z * z) / tau;
}

std::complex<double> omega_cn(std::complex<double> z, double tau, double alpha) {
  check_tau(tau);
  check_alpha(alpha);
  const std::complex<double> base = 1.0 - 0.5 * alpha + 0.5 * alpha * z;
  if (base.imag() == 0.0 && base.real() <= 0.0) {
    throw DomainError("omega_cn: base of the 1/alpha power lies on the "
                      "principal branch cut");
  }
  return (1.0 - z) / (tau * std::pow(base, 1.0 / alpha));
}

// Lanczos approximation, Godfrey coefficient set (g = 607/128, 15 terms).
// Relative error ~1e-15 on the positive axis away from the poles.
double gamma_fn(double x) {
  if (!(x > 0.0)) {
    throw ParameterError("gamma_fn requires x > 0, got " + std::to_string(x));
  }
  static constexpr double kG = 607.0 / 128.0;
  static constexpr double kCoeff[15] = {
      0.99999999999999709182,     57.156235665862923517,
      -59.597960355475491248,     14.136097974741747174,
      -0.49191381609762019978,    0.33994649984811888699e-4,
      0.46523628927048575665e-4,  -0.98374475304879564677e-4,
      0.15808870322491248884e-3,  -0.21026444172410488319e-3,
      0.21743961811521264320e-3,  -0.16431810653676389022e-3,
      0.84418223983852743293e-4,  -0.26190838401581408670e-4,
      0.36899182659531622704e-5};
  static const double kSqrtTwoPi = std::sqrt(2.0 * M_PI);

  if (x < 0.5) {
    // Reflection keeps the series argument in its accurate range.
    return M_PI / (std::sin(M_PI * x) * gamma_fn(1.0 - x));
  }
  const double z = x - 1.0;
  double series = kCoeff[0];
  for (int k = 1; k < 15; ++k) {
    series += kCoeff[k] / (z + static_cast<double>(k));
  }
  const double t = z + kG + 0.5;
  return kSqrtTwoPi * std::pow(t, z + 0.5) * std::exp(-t) * series;
}

SymbolConfig::SymbolConfig(double alpha_, double tau_) : alpha(alpha_), tau(tau_) {
  check_alpha(alpha);
  check_tau(tau);
}

}  // namespace subcrank
