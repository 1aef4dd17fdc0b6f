#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "subcrank/stepping.hpp"

namespace subcrank {

/// CLI names of the scheme variants ("cn1" / "cn2").
std::string_view scheme_name(Scheme scheme);
Scheme parse_scheme(std::string_view name);

/// One of the six study problems, all on T = 1:
///   1a  1D  f = (1 + t^mu) x^{-1/4},            u0 = 0   (mu in (0,1))
///   1b  2D  f = (1 + t^mu) box,                 u0 = 0   (mu in (0,1))
///   2a  1D  f = chi_[0,1/2](t) t^mu x^{-1/4},   u0 = 0   (mu in (-1,0))
///   2b  1D  f = 0,                              u0 = box
///   3a  2D  f = t^mu box,                       u0 = 0   (mu in (-1,0))
///   3b  2D  f = 0,                              u0 = box
/// Custom problems may be aggregate-built for ad-hoc studies.
struct ExampleSpec {
  std::string id = "custom";
  int dimension = 1;
  SpatialProfile source_spatial = SpatialProfile::zero();
  TimeProfile::Kind time_kind = TimeProfile::Kind::zero;
  double cut = 0.0;  // cutoff when time_kind == cut_power
  SpatialProfile initial = SpatialProfile::zero();
  double final_time = 1.0;
  bool needs_mu = false;
  double mu_min = -1.0;  // open interval accepted for --mu
  double mu_max = 1.0;
};

/// Looks up one of {1a, 1b, 2a, 2b, 3a, 3b}. Throws ParameterError otherwise.
ExampleSpec example_spec(std::string_view id);

struct StudyRow {
  int nsteps = 0;
  double error = 0.0;  // |u~^N - u~^{N/2}| in the discrete L2 norm at T
  double rate = 0.0;   // log2(e^{N/2} / e^N); NaN on the coarsest row
};

/// Self-convergence study results for one (example, scheme, alpha, mu).
struct ConvergenceReport {
  std::string example_id;
  Scheme scheme = Scheme::cn1;
  double alpha = 0.0;
  std::optional<double> mu;
  int mesh = 0;
  double h = 0.0;
  std::vector<StudyRow> rows;
  double summary_rate = 0.0;  // last pairwise rate
  double fitted_rate = 0.0;   // least-squares slope over all rows
  double runtime_seconds = 0.0;
  std::uint64_t factorizations = 0;
};

/// Discrete L2 norm of uN - uHalf at final time on a shared mesh.
double self_error(const Vector& uN, const Vector& uHalf, const FemSystem& system);

/// Pairwise rates log2(e_k / e_{k+1}) for errors indexed by doubling N.
/// Requires >= 2 entries, all positive.
std::vector<double> compute_rates(const std::vector<double>& errors);

/// Runs the scheme at min(n_list)/2 and at every N in n_list (a doubling
/// sequence), fills errors and rates. mesh_M is the subdivision count.
ConvergenceReport run_study(const ExampleSpec& example, Scheme scheme,
                            double alpha, std::optional<double> mu,
                            const std::vector<int>& n_list, int mesh_M);

/// One run of an example at a single step count.
struct ExampleRun {
  FemSystem system;
  Vector u_final;  // u~^N at T
};

ExampleRun run_example(const ExampleSpec& example, Scheme scheme, double alpha,
                       std::optional<double> mu, int nsteps, int mesh_M);

enum class ReportFormat { csv, markdown };

void emit(const ConvergenceReport& report, ReportFormat format, std::ostream& out);
void emit(const ConvergenceReport& report, ReportFormat format,
          const std::string& path);

/// Reads back a CSV produced by emit(). Round-trips all printed values.
ConvergenceReport parse_csv(std::istream& in);

/// Commit hash baked in at configure time ("unknown" outside a checkout).
std::string_view build_commit();

}  // namespace subcrank
