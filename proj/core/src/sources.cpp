#include "subcrank/sources.hpp"

#include <cmath>
#include <string>

#include "subcrank/errors.hpp"
#include "subcrank/linsolve.hpp"
#include "subcrank/stats.hpp"

namespace subcrank {

namespace {

void check_mu(double mu) {
  if (!(mu > -1.0)) {
    throw ParameterError("time profile exponent mu must exceed -1, got " +
                         std::to_string(mu));
  }
}

double power_or_one(double t, double mu) {
  if (t == 0.0) {
    if (mu < 0.0) {
      throw SingularityError("eval_p: t^mu is unbounded at t = 0 for mu < 0");
    }
    return mu == 0.0 ? 1.0 : 0.0;
  }
  return std::pow(t, mu);
}

}  // namespace

TimeProfile TimeProfile::zero() { return {Kind::zero, 0.0, 0.0}; }

TimeProfile TimeProfile::power(double mu) {
  check_mu(mu);
  return {Kind::power, mu, 0.0};
}

TimeProfile TimeProfile::one_plus_power(double mu) {
  check_mu(mu);
  return {Kind::one_plus_power, mu, 0.0};
}

TimeProfile TimeProfile::cut_power(double mu, double cut) {
  check_mu(mu);
  if (!(cut > 0.0)) {
    throw ParameterError("cut_power cutoff must be positive, got " +
                         std::to_string(cut));
  }
  return {Kind::cut_power, mu, cut};
}

double eval_p(const TimeProfile& profile, double t) {
  if (t < 0.0) {
    throw ParameterError("eval_p: t must be nonnegative");
  }
  stats::p_evaluations.fetch_add(1, std::memory_order_relaxed);
  switch (profile.kind) {
    case TimeProfile::Kind::zero:
      return 0.0;
    case TimeProfile::Kind::power:
      return power_or_one(t, profile.mu);
    case TimeProfile::Kind::one_plus_power:
      return 1.0 + power_or_one(t, profile.mu);
    case TimeProfile::Kind::cut_power:
      if (t > profile.cut) return 0.0;
      return power_or_one(t, profile.mu);
  }
  throw ParameterError("eval_p: unknown profile kind");
}

double eval_P(const TimeProfile& profile, double t) {
  if (t <= 0.0) return 0.0;
  const double mu = profile.mu;
  switch (profile.kind) {
    case TimeProfile::Kind::zero:
      return 0.0;
    case TimeProfile::Kind::power:
      return std::pow(t, mu + 1.0) / (mu + 1.0);
    case TimeProfile::Kind::one_plus_power:
      return t + std::pow(t, mu + 1.0) / (mu + 1.0);
    case TimeProfile::Kind::cut_power: {
      const double tc = std::min(t, profile.cut);
      return std::pow(tc, mu + 1.0) / (mu + 1.0);
    }
  }
  throw ParameterError("eval_P: unknown profile kind");
}

double eval_Ptilde(const TimeProfile& profile, double t) {
  if (t <= 0.0) return 0.0;
  const double mu = profile.mu;
  const double denom = (mu + 1.0) * (mu + 2.0);
  switch (profile.kind) {
    case TimeProfile::Kind::zero:
      return 0.0;
    case TimeProfile::Kind::power:
      return std::pow(t, mu + 2.0) / denom;
    case TimeProfile::Kind::one_plus_power:
      return 0.5 * t * t + std::pow(t, mu + 2.0) / denom;
    case TimeProfile::Kind::cut_power: {
      const double c = profile.cut;
      if (t <= c) return std::pow(t, mu + 2.0) / denom;
      // Beyond the cutoff P is constant, so Ptilde continues linearly.
      return std::pow(c, mu + 2.0) / denom +
             (t - c) * std::pow(c, mu + 1.0) / (mu + 1.0);
    }
  }
  throw ParameterError("eval_Ptilde: unknown profile kind");
}

SourceTerm make_source(const Mesh& mesh, TimeProfile time, SpatialProfile spatial) {
  SourceTerm term;
  term.time = time;
  term.spatial = spatial;
  term.load = load_vector(mesh, spatial);
  return term;
}

InitialDatum project_initial(const FemSystem& system, const SpatialProfile& u0) {
  if (u0.kind == SpatialProfile::Kind::zero) {
    return {Vector()};
  }
  return {l2_project(system, u0)};
}

}  // namespace subcrank
