#include "subcrank/harness.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>

#include "subcrank/errors.hpp"
#include "subcrank/stats.hpp"

#ifndef SUBCRANK_GIT_COMMIT
#define SUBCRANK_GIT_COMMIT "unknown"
#endif

namespace subcrank {

std::string_view build_commit() { return SUBCRANK_GIT_COMMIT; }

std::string_view scheme_name(Scheme scheme) {
  return scheme == Scheme::cn1 ? "cn1" : "cn2";
}

Scheme parse_scheme(std::string_view name) {
  if (name == "cn1") return Scheme::cn1;
  if (name == "cn2") return Scheme::cn2;
  throw ParameterError("unknown scheme '" + std::string(name) +
                       "' (expected cn1 or cn2)");
}

ExampleSpec example_spec(std::string_view id) {
  ExampleSpec ex;
  ex.id = std::string(id);
  if (id == "1a") {
    ex.dimension = 1;
    ex.source_spatial = SpatialProfile::xpow14();
    ex.time_kind = TimeProfile::Kind::one_plus_power;
    ex.needs_mu = true;
    ex.mu_min = 0.0;
    ex.mu_max = 1.0;
  } else if (id == "1b") {
    ex.dimension = 2;
    ex.source_spatial = SpatialProfile::box2d();
    ex.time_kind = TimeProfile::Kind::one_plus_power;
    ex.needs_mu = true;
    ex.mu_min = 0.0;
    ex.mu_max = 1.0;
  } else if (id == "2a") {
    ex.dimension = 1;
    ex.source_spatial = SpatialProfile::xpow14();
    ex.time_kind = TimeProfile::Kind::cut_power;
    ex.cut = 0.5;
    ex.needs_mu = true;
    ex.mu_min = -1.0;
    ex.mu_max = 0.0;
  } else if (id == "2b") {
    ex.dimension = 1;
    ex.initial = SpatialProfile::box1d();
  } else if (id == "3a") {
    ex.dimension = 2;
    ex.source_spatial = SpatialProfile::box2d();
    ex.time_kind = TimeProfile::Kind::power;
    ex.needs_mu = true;
    ex.mu_min = -1.0;
    ex.mu_max = 0.0;
  } else if (id == "3b") {
    ex.dimension = 2;
    ex.initial = SpatialProfile::box2d();
  } else {
    throw ParameterError("unknown example '" + std::string(id) +
                         "' (expected one of 1a, 1b, 2a, 2b, 3a, 3b)");
  }
  return ex;
}

double self_error(const Vector& uN, const Vector& uHalf, const FemSystem& system) {
  if (uN.size() != system.mass.rows() || uHalf.size() != system.mass.rows()) {
    throw ParameterError("self_error: solution vectors do not match the mesh");
  }
  return l2_norm(system, uN - uHalf);
}

std::vector<double> compute_rates(const std::vector<double>& errors) {
  if (errors.size() < 2) {
    throw ParameterError("compute_rates: need at least two errors");
  }
  for (double e : errors) {
    if (!(e > 0.0)) {
      throw ParameterError("compute_rates: errors must be positive");
    }
  }
  std::vector<double> rates(errors.size() - 1);
  for (std::size_t k = 0; k + 1 < errors.size(); ++k) {
    rates[k] = std::log2(errors[k] / errors[k + 1]);
  }
  return rates;
}

namespace {

TimeProfile make_time_profile(const ExampleSpec& example, std::optional<double> mu) {
  switch (example.time_kind) {
    case TimeProfile::Kind::zero:
      return TimeProfile::zero();
    case TimeProfile::Kind::power:
      return TimeProfile::power(*mu);
    case TimeProfile::Kind::one_plus_power:
      return TimeProfile::one_plus_power(*mu);
    case TimeProfile::Kind::cut_power:
      return TimeProfile::cut_power(*mu, example.cut);
  }
  throw ParameterError("unknown time profile kind");
}

void check_doubling(const std::vector<int>& n_list) {
  if (n_list.empty()) {
    throw ParameterError("run_study: the N list is empty");
  }
  for (std::size_t k = 0; k < n_list.size(); ++k) {
    if (n_list[k] < 2 || n_list[k] % 2 != 0) {
      throw ParameterError("run_study: every N must be even and >= 2");
    }
    if (k > 0 && n_list[k] != 2 * n_list[k - 1]) {
      throw ParameterError("run_study: the N list must double at each entry");
    }
  }
}

void validate_mu(const ExampleSpec& example, std::optional<double> mu) {
  if (example.needs_mu) {
    if (!mu.has_value()) {
      throw ParameterError("example " + example.id + " requires --mu");
    }
    if (!(*mu > example.mu_min && *mu < example.mu_max)) {
      throw ParameterError("example " + example.id + " requires mu in (" +
                           std::to_string(example.mu_min) + ", " +
                           std::to_string(example.mu_max) + ")");
    }
  } else if (mu.has_value()) {
    throw ParameterError("example " + example.id + " takes no mu");
  }
}

struct ProblemSetup {
  FemSystem system;
  std::vector<SourceTerm> sources;
  InitialDatum u0;
};

ProblemSetup setup_problem(const ExampleSpec& example, std::optional<double> mu,
                           int mesh_M) {
  ProblemSetup setup;
  const Mesh mesh = build_mesh(example.dimension, mesh_M);
  setup.system = assemble(mesh);
  if (example.time_kind != TimeProfile::Kind::zero) {
    setup.sources.push_back(
        make_source(mesh, make_time_profile(example, mu), example.source_spatial));
  }
  setup.u0 = project_initial(setup.system, example.initial);
  return setup;
}

SchemeConfig scheme_config(const ProblemSetup& setup, const ExampleSpec& example,
                           Scheme scheme, double alpha, int nsteps) {
  SchemeConfig config;
  config.variant = scheme;
  config.alpha = alpha;
  config.tau = example.final_time / nsteps;
  config.nsteps = nsteps;
  config.mass = &setup.system.mass;
  config.stiffness = &setup.system.stiffness;
  config.sources = setup.sources;
  config.initial = setup.u0.coeffs;
  return config;
}

double fit_rate(const std::vector<StudyRow>& rows) {
  // Least-squares slope of log2(error) against log2(N), negated.
  const std::size_t n = rows.size();
  if (n < 2) return std::numeric_limits<double>::quiet_NaN();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& row : rows) {
    const double x = std::log2(static_cast<double>(row.nsteps));
    const double y = std::log2(row.error);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double dn = static_cast<double>(n);
  return -(dn * sxy - sx * sy) / (dn * sxx - sx * sx);
}

}  // namespace

ConvergenceReport run_study(const ExampleSpec& example, Scheme scheme,
                            double alpha, std::optional<double> mu,
                            const std::vector<int>& n_list, int mesh_M) {
  check_doubling(n_list);
  validate_mu(example, mu);

  const auto t0 = std::chrono::steady_clock::now();
  const auto factorizations_before =
      stats::factorizations.load(std::memory_order_relaxed);

  const ProblemSetup setup = setup_problem(example, mu, mesh_M);
  const FemSystem& system = setup.system;

  std::map<int, Vector> final_solutions;
  std::vector<int> all_n = n_list;
  all_n.insert(all_n.begin(), n_list.front() / 2);
  for (int n : all_n) {
    final_solutions.emplace(
        n, run(scheme_config(setup, example, scheme, alpha, n)).u_final);
  }

  ConvergenceReport report;
  report.example_id = example.id;
  report.scheme = scheme;
  report.alpha = alpha;
  report.mu = mu;
  report.mesh = mesh_M;
  report.h = system.mesh.h;

  std::vector<double> errors;
  for (int n : n_list) {
    StudyRow row;
    row.nsteps = n;
    row.error = self_error(final_solutions.at(n), final_solutions.at(n / 2), system);
    row.rate = std::numeric_limits<double>::quiet_NaN();
    errors.push_back(row.error);
    report.rows.push_back(row);
  }
  if (errors.size() >= 2) {
    const auto rates = compute_rates(errors);
    for (std::size_t k = 0; k < rates.size(); ++k) {
      report.rows[k + 1].rate = rates[k];
    }
    report.summary_rate = rates.back();
  } else {
    report.summary_rate = std::numeric_limits<double>::quiet_NaN();
  }
  report.fitted_rate = fit_rate(report.rows);
  report.factorizations =
      stats::factorizations.load(std::memory_order_relaxed) - factorizations_before;
  report.runtime_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

ExampleRun run_example(const ExampleSpec& example, Scheme scheme, double alpha,
                       std::optional<double> mu, int nsteps, int mesh_M) {
  validate_mu(example, mu);
  if (nsteps < 1) {
    throw ParameterError("run_example: nsteps must be at least 1");
  }
  ProblemSetup setup = setup_problem(example, mu, mesh_M);
  ExampleRun out;
  out.u_final = run(scheme_config(setup, example, scheme, alpha, nsteps)).u_final;
  out.system = std::move(setup.system);
  return out;
}

namespace {

// Shortest decimal that round-trips through from_chars.
std::string fmt_double(double x) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

std::string fmt_error(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4e", x);
  return buf;
}

std::string fmt_rate(double x) {
  if (std::isnan(x)) return "";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", x);
  return buf;
}

double parse_double(std::string_view text, const char* what) {
  double value = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
    throw ParameterError(std::string("parse_csv: bad ") + what + " field '" +
                         std::string(text) + "'");
  }
  return value;
}

void emit_csv(const ConvergenceReport& r, std::ostream& out) {
  out << "# subcrank study example=" << r.example_id
      << " scheme=" << scheme_name(r.scheme) << " alpha=" << fmt_double(r.alpha)
      << " mu=" << (r.mu ? fmt_double(*r.mu) : "") << " mesh=" << r.mesh << "\n";
  out << "# commit=" << build_commit() << " runtime_s=" << fmt_double(r.runtime_seconds)
      << " factorizations=" << r.factorizations << "\n";
  out << "scheme,alpha,mu,h,N,error,rate\n";
  for (const auto& row : r.rows) {
    out << scheme_name(r.scheme) << ',' << fmt_double(r.alpha) << ','
        << (r.mu ? fmt_double(*r.mu) : "") << ',' << fmt_double(r.h) << ','
        << row.nsteps << ',' << fmt_error(row.error) << ',' << fmt_rate(row.rate)
        << "\n";
  }
  if (!r.rows.empty()) {
    out << "# summary_rate=" << fmt_rate(r.summary_rate) << "\n";
    out << "# fitted_rate=" << fmt_rate(r.fitted_rate) << "\n";
  }
}

void emit_markdown(const ConvergenceReport& r, std::ostream& out) {
  out << "| example | scheme | alpha | mu | h |";
  for (const auto& row : r.rows) out << " N=" << row.nsteps << " |";
  out << " rate |\n";
  out << "| --- | --- | --- | --- | --- |";
  for (std::size_t k = 0; k < r.rows.size(); ++k) out << " --- |";
  out << " --- |\n";
  out << "| " << r.example_id << " | " << scheme_name(r.scheme) << " | "
      << fmt_double(r.alpha) << " | " << (r.mu ? fmt_double(*r.mu) : "-")
      << " | " << fmt_double(r.h) << " |";
  for (const auto& row : r.rows) out << ' ' << fmt_error(row.error) << " |";
  out << ' ' << fmt_rate(r.summary_rate) << " |\n";
}

}  // namespace

void emit(const ConvergenceReport& report, ReportFormat format, std::ostream& out) {
  if (format == ReportFormat::csv) {
    emit_csv(report, out);
  } else {
    emit_markdown(report, out);
  }
  if (!out) {
    throw IoError("emit: stream write failed");
  }
}

void emit(const ConvergenceReport& report, ReportFormat format,
          const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw IoError("emit: cannot open '" + path + "' for writing");
  }
  emit(report, format, out);
  out.flush();
  if (!out) {
    throw IoError("emit: write to '" + path + "' failed");
  }
}

ConvergenceReport parse_csv(std::istream& in) {
  ConvergenceReport report;
  std::string line;
  bool saw_header = false;
  auto metadata = [&](std::string_view text, std::string_view key) -> std::string {
    const auto pos = text.find(key);
    if (pos == std::string_view::npos) return "";
    const auto start = pos + key.size();
    const auto end = text.find(' ', start);
    return std::string(text.substr(start, end == std::string_view::npos
                                              ? std::string_view::npos
                                              : end - start));
  };
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.front() == '#') {
      if (line.find("subcrank study") != std::string::npos) {
        report.example_id = metadata(line, "example=");
        report.scheme = parse_scheme(metadata(line, "scheme="));
        report.alpha = parse_double(metadata(line, "alpha="), "alpha");
        const std::string mu = metadata(line, "mu=");
        if (!mu.empty()) report.mu = parse_double(mu, "mu");
        report.mesh =
            static_cast<int>(parse_double(metadata(line, "mesh="), "mesh"));
      } else if (line.find("commit=") != std::string::npos) {
        report.runtime_seconds =
            parse_double(metadata(line, "runtime_s="), "runtime");
        report.factorizations = static_cast<std::uint64_t>(
            parse_double(metadata(line, "factorizations="), "factorizations"));
      } else if (line.find("summary_rate=") != std::string::npos) {
        const std::string v = metadata(line, "summary_rate=");
        report.summary_rate = v.empty() ? std::numeric_limits<double>::quiet_NaN()
                                        : parse_double(v, "summary rate");
      } else if (line.find("fitted_rate=") != std::string::npos) {
        const std::string v = metadata(line, "fitted_rate=");
        report.fitted_rate = v.empty() ? std::numeric_limits<double>::quiet_NaN()
                                       : parse_double(v, "fitted rate");
      }
      continue;
    }
    if (!saw_header) {
      if (line != "scheme,alpha,mu,h,N,error,rate") {
        throw ParameterError("parse_csv: unexpected header '" + line + "'");
      }
      saw_header = true;
      continue;
    }
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    while (fields.size() < 7) fields.emplace_back();
    StudyRow row;
    report.h = parse_double(fields[3], "h");
    row.nsteps = static_cast<int>(parse_double(fields[4], "N"));
    row.error = parse_double(fields[5], "error");
    row.rate = fields[6].empty() ? std::numeric_limits<double>::quiet_NaN()
                                 : parse_double(fields[6], "rate");
    report.rows.push_back(row);
  }
  if (!saw_header) {
    throw ParameterError("parse_csv: missing column header");
  }
  return report;
}

}  // namespace subcrank
