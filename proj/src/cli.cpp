#include "twoxor/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "twoxor/csv.hpp"
#include "twoxor/enumeration.hpp"
#include "twoxor/montecarlo.hpp"
#include "twoxor/sampler.hpp"
#include "twoxor/sequences.hpp"
#include "twoxor/theory.hpp"
#include "twoxor/verify.hpp"

namespace twoxor {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  std::string model = "gnp";
  std::optional<std::size_t> n;
  std::optional<double> lambda;
  double phat = 0.5;
  std::uint64_t samples = 10000;
  std::uint64_t seed = 1;
  std::string method = "rao_blackwell";
  std::string out_path;
  std::vector<std::size_t> grid_n;
  std::vector<double> grid_lambda;
  std::vector<std::string> suites;
};

std::vector<std::size_t> n_values(const RunConfig& c) {
  std::vector<std::size_t> v = c.grid_n;
  if (c.n) v.insert(v.begin(), *c.n);
  if (v.empty()) throw UsageError("--n or --grid-n is required");
  return v;
}

std::vector<double> lambda_values(const RunConfig& c) {
  std::vector<double> v = c.grid_lambda;
  if (c.lambda) v.insert(v.begin(), *c.lambda);
  if (v.empty()) throw UsageError("--lambda or --grid-lambda is required");
  return v;
}

int cmd_theory(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const auto ns = n_values(c);
  const auto lambdas = lambda_values(c);
  out << kTheoryHeader << '\n';
  for (double lambda : lambdas) {
    for (std::size_t n : ns) {
      TheoryRow row{lambda, n, kNaN, kNaN, kNaN, kNaN};
      try {
        row.c = c_lambda(lambda);
        row.c1 = c1_lambda(lambda);
        row.prediction_half = critical_prediction(n, lambda, 0.5).value;
        row.prediction_ones = critical_prediction(n, lambda, 1.0).value;
      } catch (const std::exception& e) {
        err << "warning: lambda=" << format_double(lambda) << " n=" << n << ": " << e.what() << '\n';
      }
      write_theory_row(out, row);
    }
  }
  return kExitOk;
}

double theory_for(const ModelSpec& spec) {
  if (spec.n < 10 || (spec.phat != 0.5 && spec.phat != 1.0)) return kNaN;
  try {
    return critical_prediction(spec.n, spec.lambda, spec.phat).value;
  } catch (const EnvelopeError&) {
    return kNaN;
  }
}

int cmd_simulate(const RunConfig& c, std::ostream& out) {
  if (c.samples == 0) throw UsageError("--samples must be positive");
  const GraphModel model = parse_graph_model(c.model);
  const Method method = parse_method(c.method);
  if (method == Method::RaoBlackwell && c.phat != 0.5 && c.phat != 1.0)
    throw UsageError("rao_blackwell needs --phat 0.5 or 1; use --method indicator");
  const auto ns = n_values(c);
  const auto lambdas = lambda_values(c);
  std::vector<ModelSpec> specs;
  for (double lambda : lambdas)
    for (std::size_t n : ns) {
      ModelSpec spec{model, n, lambda, c.phat};
      spec.validate();
      specs.push_back(spec);
    }
  out << kSimulateHeader << '\n';
  for (const auto& spec : specs) {
    SimulateRow row;
    row.estimate = estimate_solvability(spec, c.samples, SeedSpec{c.seed, 0}, method);
    row.theory = theory_for(spec);
    if (std::isnan(row.theory)) {
      row.comparison = {kNaN, kNaN};
    } else {
      Prediction p;
      p.value = row.theory;
      row.comparison = compare_to_theory(row.estimate, p);
    }
    write_simulate_row(out, row);
  }
  return kExitOk;
}

int cmd_enumerate(const RunConfig& c, std::ostream& out) {
  if (!c.n) throw UsageError("--n is required");
  const CountTable table = count_connected(*c.n);
  out << "n,m,count\n";
  for (const auto& [key, count] : table.entries) out << key.first << ',' << key.second << ',' << count.get_str() << '\n';
  return kExitOk;
}

void dump_sequences(std::ostream& out) {
  const auto eps = epsilon_seq(100);
  const auto f = f_seq(100);
  const auto c = wright_c_seq(100);
  out << "r,epsilon,f,c\n";
  for (std::size_t r = 0; r <= 100; ++r)
    out << r << ',' << to_fraction_string(eps[r]) << ',' << to_fraction_string(f[r]) << ','
        << (r == 0 ? std::string() : to_fraction_string(c[r])) << '\n';
}

int cmd_verify(const RunConfig& c, std::ostream& out, std::ostream* table_out) {
  const VerifyReport report = run_verify(c.suites);
  print_report(out, report);
  const bool wants_sequences =
      c.suites.empty() || std::find(c.suites.begin(), c.suites.end(), "sequences") != c.suites.end();
  if (table_out && wants_sequences) dump_sequences(*table_out);
  return exit_code(report);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Random 2-XORSAT solvability: theory, simulation, enumeration and verification", "twoxor"};
  app.require_subcommand(1);
  RunConfig c;

  auto add_model = [&c](CLI::App* s) {
    s->add_option("--model", c.model, "gnp or gnm")->capture_default_str();
    s->add_option("--phat", c.phat, "label bias Pr(b = 1)")->capture_default_str();
  };
  auto add_grid = [&c](CLI::App* s) {
    s->add_option("--n", c.n, "number of vertices");
    s->add_option("--lambda", c.lambda, "critical window parameter");
    s->add_option("--grid-n", c.grid_n, "list of n values")->delimiter(',');
    s->add_option("--grid-lambda", c.grid_lambda, "list of lambda values")->delimiter(',');
  };

  auto* theory = app.add_subcommand("theory", "c(lambda), c1(lambda) and n^{-1/12} predictions as CSV");
  add_grid(theory);
  theory->add_option("--out", c.out_path, "output file (default stdout)");

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo estimate of Pr(solvable) as CSV");
  add_model(simulate);
  add_grid(simulate);
  simulate->add_option("--samples", c.samples)->capture_default_str();
  simulate->add_option("--seed", c.seed, "master seed")->capture_default_str();
  simulate->add_option("--method", c.method, "indicator or rao_blackwell")->capture_default_str();
  simulate->add_option("--out", c.out_path, "output file (default stdout)");

  auto* enumerate = app.add_subcommand("enumerate", "connected labeled graph counts C(n, m) as CSV");
  enumerate->add_option("--n", c.n, "largest n")->required();
  enumerate->add_option("--out", c.out_path, "output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "run invariant suites");
  verify->add_option("--suite", c.suites, "suite names (default all)")->delimiter(',');
  verify->add_option("--out", c.out_path, "write the exact sequence tables here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    std::ofstream file;
    if (!c.out_path.empty()) {
      file.open(c.out_path);
      if (!file) throw UsageError("cannot open '" + c.out_path + "' for writing");
    }
    std::ostream& sink = c.out_path.empty() ? out : file;
    if (*theory) return cmd_theory(c, sink, err);
    if (*simulate) return cmd_simulate(c, sink);
    if (*enumerate) return cmd_enumerate(c, sink);
    return cmd_verify(c, out, c.out_path.empty() ? nullptr : &file);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvariant;
  }
}

}  // namespace twoxor
