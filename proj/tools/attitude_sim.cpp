/* SPDX-License-Identifier: Apache-2.0 */
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "attitude/error.hpp"
#include "attitude/measurements.hpp"
#include "attitude/sim/convert.hpp"
#include "attitude/sim/csv.hpp"
#include "attitude/sim/scenario.hpp"
#include "attitude/sim/simulation.hpp"

namespace {

using namespace attitude;
using namespace attitude::sim;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitValidation = 2;
constexpr int kExitIo = 3;

int exit_code(ErrorCode code)
{
  return code == ErrorCode::IoError ? kExitIo : kExitValidation;
}

std::vector<Method> parse_integrators(const std::string& list)
{
  std::vector<Method> out;
  std::stringstream ss(list);
  std::string name;
  while (std::getline(ss, name, ',')) {
    if (name.empty()) {
      continue;
    }
    const auto m = parse_method(name);
    if (!m) {
      throw Error(ErrorCode::ValidationError, "unknown integrator '" + name + "'");
    }
    out.push_back(*m);
  }
  if (out.empty()) {
    throw Error(ErrorCode::ValidationError, "no integrators given");
  }
  return out;
}

struct RunArgs {
  std::optional<int> example;
  std::string scenario;
  std::optional<double> dt;
  std::optional<double> t_end;
  std::string integrators;
  std::string out;
  std::size_t stride = 1;
  bool quiet = false;
};

int run(const RunArgs& a)
{
  Scenario s = a.example ? builtin_example(*a.example) : load_scenario(a.scenario);
  if (a.dt) s.dt = *a.dt;
  if (a.t_end) s.t_end = *a.t_end;
  if (!a.integrators.empty()) s.integrators = parse_integrators(a.integrators);
  validate(s);

  const RunOutput out = run_simulation(s, a.stride);
  if (a.out.empty() || a.out == "-") {
    write_csv(out, std::cout);
  }
  else {
    write_csv(out, a.out);
  }
  if (!a.quiet) {
    for (std::size_t i = 0; i < kTrackCount; ++i) {
      const TrackSummary& ts = out.tracks[i];
      if (!ts.requested) {
        continue;
      }
      const std::string name(method_name(track_method(static_cast<Track>(i))));
      if (ts.failed) {
        std::fprintf(stderr, "%-14s failed at t = %.6g s: %s\n", name.c_str(), ts.failure_time,
                     ts.failure_reason.c_str());
      }
      else {
        std::fprintf(stderr, "%-14s max |divergence| %.3e  max frobenius %.3e\n", name.c_str(),
                     ts.max_abs_divergence, ts.max_frobenius);
      }
    }
  }
  return kExitOk;
}

struct ConvertArgs {
  std::string from;
  std::string to;
  std::string value;
  std::string units = "deg";
};

int convert(const ConvertArgs& a)
{
  const auto from = parse_rep(a.from);
  const auto to = parse_rep(a.to);
  if (!from || !to) {
    throw Error(ErrorCode::ParseError, "unknown representation '" + (from ? a.to : a.from) +
                                           "' (so3, euler, angle-axis, rodriguez, quat)");
  }
  const AngleUnit unit = a.units == "rad" ? AngleUnit::Radians : AngleUnit::Degrees;
  std::cout << convert_value(*from, *to, a.value, unit) << '\n';
  return kExitOk;
}

int check_identities(std::size_t samples, std::uint64_t seed)
{
  const LemmaReport r = lemma_suite(samples, seed);
  for (const IdentityResidual& id : r.identities) {
    std::printf("%-30s %s  max residual %.3e  (tol %.0e, %zu evaluated, %zu skipped)\n", id.name.c_str(),
                id.passed() ? "PASS" : "FAIL", id.max_residual, id.tolerance, id.evaluated, id.skipped);
  }
  std::printf("%-30s %s  %zu violations  worst lhs/rhs %.6f  (%zu evaluated, %zu skipped)\n",
              "weighted.bound", r.bound_violations == 0 ? "PASS" : "FAIL", r.bound_violations,
              r.bound_worst_ratio, r.bound_evaluated, r.bound_skipped);
  return r.all_passed() ? kExitOk : kExitFailed;
}

}  // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Rigid-body attitude representations, conversions and kinematics"};
  app.require_subcommand(1);

  RunArgs run_args;
  CLI::App* run_cmd = app.add_subcommand("run", "Integrate a scenario with every representation and write CSV");
  auto* ex = run_cmd->add_option("--example", run_args.example, "Built-in example (1 or 2)");
  auto* sc = run_cmd->add_option("--scenario", run_args.scenario, "Scenario JSON file");
  ex->excludes(sc);
  run_cmd->add_option("--dt", run_args.dt, "Step size in seconds");
  run_cmd->add_option("--t-end", run_args.t_end, "End time in seconds");
  run_cmd->add_option("--integrators", run_args.integrators,
                      "Comma separated: so3-exact,euler-rk4,rodriguez-rk4,quat-rk4,quat-exact");
  run_cmd->add_option("--out", run_args.out, "Output CSV path, '-' for stdout");
  run_cmd->add_option("--stride", run_args.stride, "Emit every N-th step")->check(CLI::PositiveNumber);
  run_cmd->add_flag("--quiet", run_args.quiet, "Do not print the summary");

  ConvertArgs conv_args;
  CLI::App* conv_cmd = app.add_subcommand("convert", "Convert an attitude between representations");
  conv_cmd->add_option("--from", conv_args.from, "so3, euler, angle-axis, rodriguez, quat")->required();
  conv_cmd->add_option("--to", conv_args.to, "so3, euler, angle-axis, rodriguez, quat")->required();
  conv_cmd->add_option("--value", conv_args.value, "Numbers, e.g. \"[0.9865, 0.0282, 0.1210, 0.1069]\"")
      ->required();
  conv_cmd->add_option("--units", conv_args.units, "Angle unit for euler and angle-axis")
      ->check(CLI::IsMember({"deg", "rad"}));

  std::size_t samples = 10000;
  std::uint64_t seed = 1;
  CLI::App* id_cmd = app.add_subcommand("check-identities", "Evaluate the attitude identities on random samples");
  id_cmd->add_option("--samples", samples, "Number of samples")->check(CLI::PositiveNumber);
  id_cmd->add_option("--seed", seed, "Random seed");

  int example_n = 1;
  CLI::App* ex_cmd = app.add_subcommand("example", "Print a built-in example as scenario JSON");
  ex_cmd->add_option("n", example_n, "Example number (1 or 2)")->required();

  try {
    app.parse(argc, argv);
  }
  catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (*run_cmd) {
      if (!run_args.example && run_args.scenario.empty()) {
        std::fprintf(stderr, "error: run needs --example or --scenario\n");
        return kExitValidation;
      }
      return run(run_args);
    }
    if (*conv_cmd) {
      return convert(conv_args);
    }
    if (*id_cmd) {
      return check_identities(samples, seed);
    }
    if (*ex_cmd) {
      std::cout << scenario_to_json(builtin_example(example_n));
      return kExitOk;
    }
  }
  catch (const Error& e) {
    std::fprintf(stderr, "error: %s [%s]\n", e.what(), std::string(to_string(e.code())).c_str());
    return exit_code(e.code());
  }
  return kExitOk;
}
