// Command-line driver: GL weight dumps, single runs, and convergence studies.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "subcrank/errors.hpp"
#include "subcrank/harness.hpp"
#include "subcrank/kernels.hpp"

namespace {

struct WeightsArgs {
  double alpha = 0.5;
  std::size_t n = 0;
};

struct RunArgs {
  std::string example;
  std::string scheme = "cn1";
  double alpha = 0.5;
  std::optional<double> mu;
  int nsteps = 0;
  int mesh = 0;
  std::string out;
};

struct StudyArgs {
  std::string example;
  std::string scheme = "cn1";
  double alpha = 0.5;
  std::optional<double> mu;
  std::vector<int> n_list;
  int mesh = 0;
  std::string format = "csv";
  std::string out;
  bool rate_fit = false;
};

int cmd_weights(const WeightsArgs& args) {
  const auto w = subcrank::gl_weights(args.alpha, args.n);
  for (double s : w.sigma) {
    std::printf("%.17g\n", s);
  }
  return 0;
}

int default_mesh(const subcrank::ExampleSpec& example) {
  return example.dimension == 1 ? 128 : 64;
}

int cmd_run(const RunArgs& args) {
  const auto example = subcrank::example_spec(args.example);
  const auto scheme = subcrank::parse_scheme(args.scheme);
  const int mesh = args.mesh > 0 ? args.mesh : default_mesh(example);
  const auto result = subcrank::run_example(example, scheme, args.alpha, args.mu,
                                            args.nsteps, mesh);
  const double norm = subcrank::l2_norm(result.system, result.u_final);
  std::printf("example=%s scheme=%s alpha=%g mu=%s N=%d mesh=%d l2_norm=%.10e\n",
              example.id.c_str(), args.scheme.c_str(), args.alpha,
              args.mu ? std::to_string(*args.mu).c_str() : "-", args.nsteps,
              mesh, norm);
  if (!args.out.empty()) {
    std::ofstream file(args.out);
    if (!file) {
      throw subcrank::IoError("cannot open '" + args.out + "' for writing");
    }
    char buf[32];
    for (Eigen::Index i = 0; i < result.u_final.size(); ++i) {
      std::snprintf(buf, sizeof(buf), "%.17g\n", result.u_final[i]);
      file << buf;
    }
    if (!file) {
      throw subcrank::IoError("write to '" + args.out + "' failed");
    }
  }
  return 0;
}

int cmd_study(const StudyArgs& args) {
  const auto example = subcrank::example_spec(args.example);
  const auto scheme = subcrank::parse_scheme(args.scheme);
  const int mesh = args.mesh > 0 ? args.mesh : default_mesh(example);
  auto report = subcrank::run_study(example, scheme, args.alpha, args.mu,
                                    args.n_list, mesh);
  if (args.rate_fit) {
    report.summary_rate = report.fitted_rate;
  }
  const auto format = args.format == "md" ? subcrank::ReportFormat::markdown
                                          : subcrank::ReportFormat::csv;
  if (args.out.empty()) {
    subcrank::emit(report, format, std::cout);
  } else {
    subcrank::emit(report, format, args.out);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"subcrank: correction-free fractional Crank-Nicolson solvers "
               "for the sub-diffusion equation, with a convergence-study "
               "harness"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Key-value config file mirroring all flags; "
                                 "command-line flags override the file");

  WeightsArgs wargs;
  auto* weights = app.add_subcommand(
      "weights", "Print the Grunwald-Letnikov weights, one per line");
  weights->add_option("--alpha", wargs.alpha, "Fractional order in (0,1)")
      ->required();
  weights->add_option("--n", wargs.n, "Highest weight index")->required();

  RunArgs rargs;
  auto* run = app.add_subcommand("run", "Run one example at a single step count");
  run->add_option("--example", rargs.example, "One of 1a,1b,2a,2b,3a,3b")
      ->required();
  run->add_option("--scheme", rargs.scheme, "cn1 or cn2");
  run->add_option("--alpha", rargs.alpha, "Fractional order in (0,1)")->required();
  run->add_option("--mu", rargs.mu, "Source exponent (examples 1a,1b,2a,3a)");
  run->add_option("--nsteps", rargs.nsteps, "Number of time steps")->required();
  run->add_option("--mesh", rargs.mesh,
                  "Subdivisions per axis (default 128 in 1D, 64 in 2D)");
  run->add_option("--out", rargs.out, "Write final coefficients to this file");

  StudyArgs sargs;
  auto* study = app.add_subcommand(
      "study", "Self-convergence study over a doubling list of step counts");
  study->add_option("--example", sargs.example, "One of 1a,1b,2a,2b,3a,3b")
      ->required();
  study->add_option("--scheme", sargs.scheme, "cn1 or cn2");
  study->add_option("--alpha", sargs.alpha, "Fractional order in (0,1)")
      ->required();
  study->add_option("--mu", sargs.mu, "Source exponent (examples 1a,1b,2a,3a)");
  study->add_option("--nsteps-list", sargs.n_list, "Doubling list, e.g. 80,160,320,640")
      ->required()
      ->delimiter(',');
  study->add_option("--mesh", sargs.mesh,
                    "Subdivisions per axis (default 128 in 1D, 64 in 2D)");
  study->add_option("--format", sargs.format, "csv or md")
      ->check(CLI::IsMember({"csv", "md"}));
  study->add_option("--out", sargs.out, "Output file (stdout when omitted)");
  study->add_flag("--rate-fit", sargs.rate_fit,
                  "Report the least-squares rate as the summary instead of "
                  "the last pairwise rate");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (weights->parsed()) return cmd_weights(wargs);
    if (run->parsed()) return cmd_run(rargs);
    if (study->parsed()) return cmd_study(sargs);
    return 2;
  } catch (const subcrank::NumericError& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return 3;
  } catch (const subcrank::ParameterError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const subcrank::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
