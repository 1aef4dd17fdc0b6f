#pragma once

#include <vector>

#include "subcrank/kernels.hpp"
#include "subcrank/linsolve.hpp"
#include "subcrank/sources.hpp"
#include "subcrank/types.hpp"

namespace subcrank {

/// The two fractional Crank–Nicolson variants. They differ only in the
/// source factor on the right-hand side: cn1 uses the running integral P
/// at t_m and t_{m-1}; cn2 uses the discrete BDF2 derivative of the double
/// integral Ptilde at the same points. For f = 0 they coincide.
enum class Scheme { cn1, cn2 };

/// Full configuration of a time-stepping run over [0, nsteps * tau].
/// mass and stiffness are non-owning; the caller keeps them alive.
struct SchemeConfig {
  Scheme variant = Scheme::cn1;
  double alpha = 0.5;  // fractional order, (0, 1)
  double tau = 0.0;    // step size
  int nsteps = 0;      // N

  const SparseMatrix* mass = nullptr;
  const SparseMatrix* stiffness = nullptr;
  std::vector<SourceTerm> sources;
  Vector initial;  // projected u0 coefficients; empty means zero

  bool keep_solution_history = false;
};

/// Time-stepping state: the history of integrated-unknown coefficient
/// vectors Ubar^0..Ubar^n (Ubar^0 = 0, zero extension below 0) and the
/// factorization of the constant system matrix
///   K = tau^{-alpha} M + (1 - alpha/2) S,
/// built exactly once per run.
class SchemeState {
 public:
  explicit SchemeState(const SchemeConfig& config);

  int step_index() const { return n_; }
  const std::vector<Vector>& history() const { return history_; }
  const SpdFactorization& factorization() const { return factored_; }
  const GLWeights& weights() const { return weights_; }

  /// Ubar^k with zero extension for k < 0.
  const Vector& ubar(int k) const;

 private:
  friend void step(SchemeState& state, const SchemeConfig& config);

  std::vector<Vector> history_;
  SpdFactorization factored_;
  GLWeights weights_;
  Vector mass_u0_;  // M * u0, precomputed once
  Vector zero_;
  int n_ = 0;
};

/// Advances the state from step n to n+1: solves
///   K Ubar^{m} = r_m - tau^{-alpha} M (sum_{j=1..m} sigma_j Ubar^{m-j})
///                - (alpha/2) S Ubar^{m-1},   m = n+1,
/// where r_m collects the theta-averaged source factors times the spatial
/// loads plus the theta-averaged initial-data coefficient times M u0.
void step(SchemeState& state, const SchemeConfig& config);

/// BDF2 recovery (3/2 U[n] - 2 U[n-1] + 1/2 U[n-2]) / tau from a coefficient
/// sequence indexed from 0, with zero extension below index 0.
Vector bdf2_recover(const std::vector<Vector>& ubar_history, int n, double tau);

/// Recovers the solution iterate u~^n from the state's Ubar history.
Vector recover_u(const SchemeState& state, int n, double tau);

struct RunResult {
  Vector u_final;                 // u~^N
  std::vector<Vector> u_history;  // u~^1..u~^N when requested
};

/// Runs the configured scheme for all N steps and recovers u~^N.
RunResult run(const SchemeConfig& config);

}  // namespace subcrank
