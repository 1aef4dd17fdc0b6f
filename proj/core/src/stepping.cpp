#include "subcrank/stepping.hpp"

#include <cmath>
#include <string>

#include "subcrank/errors.hpp"

namespace subcrank {

namespace {

void validate(const SchemeConfig& config) {
  if (!(config.alpha > 0.0 && config.alpha < 1.0)) {
    throw ParameterError("scheme: alpha must lie in (0, 1)");
  }
  if (!(config.tau > 0.0)) {
    throw ParameterError("scheme: tau must be positive");
  }
  if (config.nsteps < 1) {
    throw ParameterError("scheme: nsteps must be at least 1");
  }
  if (config.mass == nullptr || config.stiffness == nullptr) {
    throw ParameterError("scheme: mass and stiffness matrices are required");
  }
  const auto dofs = config.mass->rows();
  if (config.mass->cols() != dofs || config.stiffness->rows() != dofs ||
      config.stiffness->cols() != dofs) {
    throw ParameterError("scheme: mass and stiffness must be square and of "
                         "matching dimension");
  }
  for (const auto& src : config.sources) {
    if (src.load.size() != dofs) {
      throw ParameterError("scheme: source load has size " +
                           std::to_string(src.load.size()) + ", expected " +
                           std::to_string(dofs));
    }
  }
  if (config.initial.size() != 0 && config.initial.size() != dofs) {
    throw ParameterError("scheme: initial coefficients have size " +
                         std::to_string(config.initial.size()) + ", expected " +
                         std::to_string(dofs));
  }
}

// Time factor multiplying the spatial load at step index k.
// cn1: the running integral P(t_k). cn2: the discrete BDF2 derivative of
// the double integral Ptilde at t_k, with Ptilde = 0 for t <= 0.
double source_factor(const TimeProfile& profile, int k, Scheme variant,
                     double tau) {
  if (k <= 0) return 0.0;
  if (variant == Scheme::cn1) {
    return eval_P(profile, k * tau);
  }
  return bdf2_diff(eval_Ptilde(profile, k * tau),
                   eval_Ptilde(profile, (k - 1) * tau),
                   eval_Ptilde(profile, (k - 2) * tau), tau);
}

}  // namespace

SchemeState::SchemeState(const SchemeConfig& config) {
  validate(config);
  const auto dofs = config.mass->rows();
  const double theta = 1.0 - 0.5 * config.alpha;

  SparseMatrix K = std::pow(config.tau, -config.alpha) * (*config.mass);
  K += theta * (*config.stiffness);
  factored_ = SpdFactorization(K);

  weights_ = gl_weights(config.alpha, static_cast<std::size_t>(config.nsteps));
  zero_ = Vector::Zero(dofs);
  if (config.initial.size() != 0) {
    mass_u0_ = (*config.mass) * config.initial;
  }
  history_.reserve(static_cast<std::size_t>(config.nsteps) + 1);
  history_.push_back(zero_);  // Ubar^0 = 0
}

const Vector& SchemeState::ubar(int k) const {
  if (k < 0) return zero_;
  if (k > n_) {
    throw ParameterError("ubar: step " + std::to_string(k) +
                         " has not been computed yet");
  }
  return history_[static_cast<std::size_t>(k)];
}

void step(SchemeState& state, const SchemeConfig& config) {
  const int m = state.n_ + 1;
  if (m > config.nsteps) {
    throw ParameterError("step: run is already complete (n = N)");
  }
  const double alpha = config.alpha;
  const double tau = config.tau;
  const double th0 = 1.0 - 0.5 * alpha;
  const double th1 = 0.5 * alpha;
  const auto& sigma = state.weights_.sigma;

  // sigma-weighted history; Ubar^0 = 0, so j stops at m-1.
  Vector acc = Vector::Zero(state.zero_.size());
  for (int j = 1; j <= m - 1; ++j) {
    acc.noalias() += sigma[static_cast<std::size_t>(j)] * state.history_[m - j];
  }

  Vector b = -std::pow(tau, -alpha) * ((*config.mass) * acc);
  b.noalias() -= th1 * ((*config.stiffness) * state.history_[m - 1]);
  for (const auto& src : config.sources) {
    const double f = th0 * source_factor(src.time, m, config.variant, tau) +
                     th1 * source_factor(src.time, m - 1, config.variant, tau);
    if (f != 0.0) b.noalias() += f * src.load;
  }
  if (state.mass_u0_.size() != 0) {
    const double ic = th0 * initial_coeff(m, alpha, tau) +
                      (m >= 2 ? th1 * initial_coeff(m - 1, alpha, tau) : 0.0);
    b.noalias() += ic * state.mass_u0_;
  }

  state.history_.push_back(state.factored_.solve(b));
  state.n_ = m;
}

Vector bdf2_recover(const std::vector<Vector>& ubar_history, int n, double tau) {
  if (n < 1 || n >= static_cast<int>(ubar_history.size())) {
    throw ParameterError("bdf2_recover: index " + std::to_string(n) +
                         " outside the supplied history");
  }
  if (!(tau > 0.0)) {
    throw ParameterError("bdf2_recover: tau must be positive");
  }
  Vector u = 1.5 * ubar_history[n];
  u.noalias() -= 2.0 * ubar_history[n - 1];
  if (n >= 2) u.noalias() += 0.5 * ubar_history[n - 2];
  return u / tau;
}

Vector recover_u(const SchemeState& state, int n, double tau) {
  if (n < 1 || n > state.step_index()) {
    throw ParameterError("recover_u: index " + std::to_string(n) +
                         " outside the computed range");
  }
  return bdf2_recover(state.history(), n, tau);
}

RunResult run(const SchemeConfig& config) {
  SchemeState state(config);
  for (int m = 1; m <= config.nsteps; ++m) {
    step(state, config);
  }
  RunResult result;
  result.u_final = recover_u(state, config.nsteps, config.tau);
  if (config.keep_solution_history) {
    result.u_history.reserve(static_cast<std::size_t>(config.nsteps));
    for (int n = 1; n <= config.nsteps; ++n) {
      result.u_history.push_back(recover_u(state, n, config.tau));
    }
  }
  return result;
}

}  // namespace subcrank
