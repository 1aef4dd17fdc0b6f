#pragma once

#include "subcrank/mesh_fem.hpp"
#include "subcrank/types.hpp"

namespace subcrank {

/// Time factor p(t) of a separable source, carrying closed forms for the
/// running integrals P = 1*p and Ptilde = 1*1*p. The integrals are what the
/// schemes consume; p itself is never needed on the stepping path, which is
/// how profiles singular at t = 0 (mu < 0) stay quadrature-free.
struct TimeProfile {
  enum class Kind { zero, power, one_plus_power, cut_power };

  Kind kind = Kind::zero;
  double mu = 0.0;   // exponent, > -1
  double cut = 0.0;  // cutoff time (cut_power only)

  static TimeProfile zero();
  /// p(t) = t^mu.
  static TimeProfile power(double mu);
  /// p(t) = 1 + t^mu.
  static TimeProfile one_plus_power(double mu);
  /// p(t) = t^mu on [0, cut], 0 afterwards.
  static TimeProfile cut_power(double mu, double cut);
};

/// Pointwise value p(t). Requires t >= 0; throws SingularityError at t = 0
/// when mu < 0. Instrumented via stats::p_evaluations.
double eval_p(const TimeProfile& profile, double t);

/// P(t) = integral of p over [0, t]; P(t) = 0 for t <= 0.
double eval_P(const TimeProfile& profile, double t);

/// Ptilde(t) = integral of P over [0, t]; Ptilde(t) = 0 for t <= 0.
double eval_Ptilde(const TimeProfile& profile, double t);

/// Separable source term p(t) * g(x) with the spatial load precomputed.
struct SourceTerm {
  TimeProfile time;
  SpatialProfile spatial;
  Vector load;  // load_vector(mesh, spatial) for the run's mesh
};

SourceTerm make_source(const Mesh& mesh, TimeProfile time, SpatialProfile spatial);

/// Projected initial datum: coefficients of P_h u0 (empty vector = zero).
struct InitialDatum {
  Vector coeffs;
};

InitialDatum project_initial(const FemSystem& system, const SpatialProfile& u0);

}  // namespace subcrank
