#include <cmath>
#include <complex>
#include <vector>

#include <doctest.h>

#include "oracles.hpp"
#include "subcrank/errors.hpp"
#include "subcrank/kernels.hpp"

using namespace subcrank;
using std::complex;

namespace {

// (-1)^j * binom(alpha, j), the closed form of the GL weights.
double signed_binomial(double alpha, int j) {
  double value = 1.0;
  for (int k = 1; k <= j; ++k) {
    value *= -(alpha - (k - 1)) / k;
  }
  return value;
}

// Least-squares slope of log(err) against log(tau).
double observed_order(const std::vector<double>& taus,
                      const std::vector<double>& errs) {
  const auto n = static_cast<double>(taus.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t k = 0; k < taus.size(); ++k) {
    const double x = std::log(taus[k]);
    const double y = std::log(errs[k]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace

TEST_SUITE_BEGIN("kernels");

TEST_CASE("gl weights follow the recursion") {
  const auto w = gl_weights(0.5, 4);
  REQUIRE(w.sigma.size() == 5);
  CHECK(w.sigma[0] == 1.0);
  CHECK(w.sigma[1] == doctest::Approx(-0.5).epsilon(1e-15));
  CHECK(w.sigma[2] == doctest::Approx(-0.125).epsilon(1e-15));
  CHECK(w.sigma[3] == doctest::Approx(-0.0625).epsilon(1e-15));
  CHECK(w.sigma[4] == doctest::Approx(-0.0390625).epsilon(1e-15));
}

TEST_CASE("gl weights reject invalid orders") {
  CHECK_THROWS_AS(gl_weights(0.0, 4), ParameterError);
  CHECK_THROWS_AS(gl_weights(1.0, 4), ParameterError);
  CHECK_THROWS_AS(gl_weights(-0.2, 4), ParameterError);
  CHECK_THROWS_AS(gl_weights(1.5, 4), ParameterError);
}

TEST_CASE("gl weights are negative past j=0 with nonincreasing magnitude") {
  for (double alpha : {0.1, 0.5, 0.9}) {
    const auto w = gl_weights(alpha, 600);
    for (std::size_t j = 1; j < w.sigma.size(); ++j) {
      CHECK(w.sigma[j] < 0.0);
      if (j >= 2) CHECK(std::abs(w.sigma[j]) <= std::abs(w.sigma[j - 1]));
    }
  }
}

TEST_CASE("gl weight partial sums decrease to zero") {
  const auto w = gl_weights(0.5, 4096);
  double s = 0.0, prev = 2.0;
  for (double sigma : w.sigma) {
    s += sigma;
    CHECK(s > 0.0);
    CHECK(s <= prev);
    prev = s;
  }
  // tail behaves like J^{-alpha} / Gamma(1 - alpha)
  const double tail = std::pow(4096.0, -0.5) / gamma_fn(0.5);
  CHECK(s == doctest::Approx(tail).epsilon(0.02));
}

TEST_CASE("gl weights match the signed binomial closed form") {
  for (double alpha : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    const auto w = gl_weights(alpha, 400);
    for (int j = 0; j <= 400; ++j) {
      CHECK(std::abs(w.sigma[j] - signed_binomial(alpha, j)) <= 1e-13);
    }
  }
}

TEST_CASE("gl generating function identity") {
  // sum sigma_j z^j = (1-z)^alpha
  const auto w = gl_weights(0.3, 512);
  double sum = 0.0, zj = 1.0;
  for (double sigma : w.sigma) {
    sum += sigma * zj;
    zj *= 0.9;
  }
  CHECK(std::abs(sum - std::pow(0.1, 0.3)) <= 1e-8);

  for (double alpha : {0.2, 0.8}) {
    const auto ww = gl_weights(alpha, 2048);
    for (complex<double> z :
         {complex<double>(0.95, 0.0), complex<double>(-0.95, 0.0),
          complex<double>(0.6, 0.7), complex<double>(0.0, -0.9)}) {
      complex<double> acc = 0.0, zp = 1.0;
      for (double sigma : ww.sigma) {
        acc += sigma * zp;
        zp *= z;
      }
      const double tol = 1e-6 / (1.0 - std::abs(z));
      CHECK(std::abs(acc - std::pow(1.0 - z, alpha)) <= tol);
    }
  }
}

TEST_CASE("bdf2 difference is exact on low-degree polynomials") {
  const double tau = 0.05;
  for (int n : {2, 7, 40}) {
    auto t = [&](int k) { return k * tau; };
    // quadratic
    CHECK(bdf2_diff(t(n) * t(n), t(n - 1) * t(n - 1), t(n - 2) * t(n - 2), tau) ==
          doctest::Approx(2.0 * t(n)).epsilon(1e-12));
    // constant
    CHECK(bdf2_diff(3.7, 3.7, 3.7, tau) == doctest::Approx(0.0));
  }
  // first step of g(t) = t with zero extension
  CHECK(bdf2_diff(tau, 0.0, 0.0, tau) == doctest::Approx(1.5).epsilon(1e-15));
  CHECK_THROWS_AS(bdf2_diff(1.0, 1.0, 1.0, 0.0), ParameterError);
}

TEST_CASE("initial-data coefficient") {
  // hand arithmetic: 1.5 * 0.1^{1.5} / (0.1 * Gamma(2.5))
  CHECK(initial_coeff(1, 0.5, 0.1) ==
        doctest::Approx(0.35682482323055414).epsilon(1e-12));
  CHECK(initial_coeff(1, 0.5, 0.1) ==
        doctest::Approx(1.5 * std::pow(0.1, 1.5) / (0.1 * gamma_fn(2.5)))
            .epsilon(1e-14));

  // large n: approaches the exact derivative t^{1-alpha} / Gamma(2-alpha)
  {
    const double alpha = 0.5, tau = 0.01;
    const int n = 10000;
    const double t = n * tau;
    const double exact = std::pow(t, 1.0 - alpha) / gamma_fn(2.0 - alpha);
    CHECK(initial_coeff(n, alpha, tau) == doctest::Approx(exact).epsilon(1e-6));
  }

  // alpha -> 1: profile tends to t, whose discrete derivative is 1 at n = 2
  CHECK(initial_coeff(2, 1.0 - 1e-7, 0.3) == doctest::Approx(1.0).epsilon(1e-4));

  CHECK_THROWS_AS(initial_coeff(0, 0.5, 0.1), ParameterError);
  CHECK_THROWS_AS(initial_coeff(-3, 0.5, 0.1), ParameterError);
}

TEST_CASE("symbols vanish at z = 1 and match hand values") {
  CHECK(std::abs(omega1(1.0, 0.25)) == 0.0);
  CHECK(std::abs(omega2(1.0, 0.25)) == 0.0);
  CHECK(std::abs(omega_cn(1.0, 0.25, 0.5)) == 0.0);
  CHECK(std::abs(omega_cn(0.0, 1.0, 0.5) - 16.0 / 9.0) <= 1e-15);
  CHECK(std::abs(omega1(complex<double>(0.0, 1.0), 0.5) -
                 complex<double>(2.0, -2.0)) <= 1e-15);
}

TEST_CASE("omega_cn rejects the branch cut") {
  // base = 1 - a/2 + a/2 z on the closed negative real axis
  CHECK_THROWS_AS(omega_cn(-1.3, 1.0, 0.9), DomainError);
  const double z_pole = -(1.0 - 0.45) / 0.45;  // base exactly zero
  CHECK_THROWS_AS(omega_cn(z_pole, 1.0, 0.9), DomainError);
}

TEST_CASE("symbol consistency: omega2 bounded by 3|s| on the sector") {
  const double theta = M_PI / 2 + 0.05;
  for (double alpha : {0.1, 0.5, 0.9}) {
    (void)alpha;  // omega2 does not depend on alpha; sweep kept for the grid
    for (double rho : {0.05, 0.2, 0.5, 0.8, 1.0}) {
      for (double arg : {0.0, 0.7, -0.7, 1.3, -1.3, theta, -theta}) {
        const complex<double> s = std::polar(rho, arg);  // s*tau with tau=1
        CHECK(std::abs(omega2(std::exp(-s), 1.0)) / std::abs(s) <= 3.0);
      }
    }
  }
}

TEST_CASE("symbol consistency: order-2 defect at fixed s") {
  std::vector<double> taus;
  for (int k = 4; k <= 10; ++k) taus.push_back(std::pow(2.0, -k));
  const complex<double> s(1.0, 0.0);
  for (double alpha : {0.1, 0.5, 0.9}) {
    for (double beta : {alpha, 1.0}) {
      std::vector<double> errs;
      for (double tau : taus) {
        const auto w2 = omega2(std::exp(-s * tau), tau);
        errs.push_back(std::abs(std::pow(s, beta) - std::pow(w2, beta)));
      }
      const double order = observed_order(taus, errs);
      CHECK(order >= 1.9);
      CHECK(order <= 2.5);
    }
    std::vector<double> errs;
    for (double tau : taus) {
      const auto w = omega_cn(std::exp(-s * tau), tau, alpha);
      errs.push_back(std::abs(std::pow(s, alpha) - std::pow(w, alpha)));
    }
    const double order = observed_order(taus, errs);
    CHECK(order >= 1.9);
    CHECK(order <= 2.5);
  }
}

TEST_CASE("symbol consistency: omega comparable to |s| on the rays") {
  const double theta = M_PI / 2 + 0.05;
  const double tau = 1.0 / 64.0;
  const double rho_max = M_PI / std::sin(theta) / tau;
  for (double alpha : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    double lo = 1e300, hi = 0.0;
    for (int k = 1; k <= 40; ++k) {
      const double rho = rho_max * k / 40.0;
      for (double sgn : {1.0, -1.0}) {
        const complex<double> s = std::polar(rho, sgn * theta);
        const double ratio = std::abs(omega_cn(std::exp(-s * tau), tau, alpha)) /
                             std::abs(s);
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
      }
    }
    CHECK(lo >= 1e-3);
    CHECK(hi <= 1e3);
  }
}

TEST_CASE("gamma function values") {
  CHECK(gamma_fn(1.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(gamma_fn(2.0) == doctest::Approx(1.0).epsilon(1e-14));
  // Gamma(2.5) = 3 sqrt(pi) / 4
  CHECK(gamma_fn(2.5) ==
        doctest::Approx(1.3293403881791370205).epsilon(1e-13));
  CHECK(gamma_fn(0.5) == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-13));
  CHECK_THROWS_AS(gamma_fn(0.0), ParameterError);
  CHECK_THROWS_AS(gamma_fn(-1.3), ParameterError);
}

TEST_CASE("gamma function agrees with the quadrature oracle") {
  CHECK(std::abs(gamma_fn(1.7) - oracle::gamma_by_quadrature(1.7)) <= 1e-10);
  for (double x : {1.1, 1.9, 2.3, 2.7, 3.1}) {
    CHECK(std::abs(gamma_fn(x) - oracle::gamma_by_quadrature(x)) <=
          1e-10 * oracle::gamma_by_quadrature(x));
  }
}

TEST_CASE("gamma function accurate across (0.5, 3.5)") {
  for (double x = 0.51; x < 3.5; x += 0.01) {
    CHECK(std::abs(gamma_fn(x) - std::tgamma(x)) <= 1e-12 * std::tgamma(x));
  }
}

TEST_CASE("symbol config validates its parameters") {
  CHECK_THROWS_AS(SymbolConfig(0.5, 0.0), ParameterError);
  CHECK_THROWS_AS(SymbolConfig(1.2, 0.1), ParameterError);
  const SymbolConfig cfg(0.4, 0.125);
  CHECK(std::abs(cfg.w2(1.0)) == 0.0);
  CHECK(std::abs(cfg.w1(0.0) - 8.0) <= 1e-15);
}

TEST_SUITE_END();
