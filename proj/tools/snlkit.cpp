#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "snlkit/cli.hpp"
#include "snlkit/fixtures.hpp"

int main(int argc, char** argv) {
  using snlkit::cli::Options;

  CLI::App app{"Checks positivity, maximality and monotonicity in symmetric nonexpansive linear spaces"};
  app.set_version_flag("--version", std::string(snlkit::io::kVersion));

  std::string command, target;
  Options o;
  double tol = 0, lambda = 0, eta = 0, theta_max = 0;
  std::uint64_t seed = 0;
  int trials = 0;
  long samples = 0, size = 0;
  std::string json_out;

  std::string names;
  for (const auto& c : snlkit::cli::commands()) names += (names.empty() ? "" : ", ") + c;
  app.add_option("command", command, "one of: " + names)->required();
  app.add_option("target", target, "instance JSON file, or fixture name for `fixtures`")
      ->required();
  auto* tol_opt = app.add_option("--tol", tol, "decision tolerance");
  auto* seed_opt = app.add_option("--seed", seed, "RNG seed");
  auto* trials_opt = app.add_option("--trials", trials, "oracle trials");
  auto* samples_opt = app.add_option("--samples", samples, "sample count");
  auto* json_opt = app.add_option("--json", json_out, "also write the report to this file");
  auto* lambda_opt = app.add_option("--lambda", lambda, "helix pitch");
  auto* eta_opt = app.add_option("--eta", eta, "br-refine tolerance eta");
  auto* size_opt = app.add_option("--size", size, "fixture dimension");
  auto* theta_opt = app.add_option("--theta-max", theta_max, "helix parameter range");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : snlkit::cli::kExitError;
  }

  if (*tol_opt) o.tol = tol;
  if (*seed_opt) o.seed = seed;
  if (*trials_opt) o.trials = trials;
  if (*samples_opt) o.samples = samples;
  if (*json_opt) o.json_out = json_out;
  if (*lambda_opt) o.lambda = lambda;
  if (*eta_opt) o.eta = eta;
  if (*size_opt) o.size = size;
  if (*theta_opt) o.theta_max = theta_max;

  return snlkit::cli::run(command, target, o, std::cout, std::cerr);
}
