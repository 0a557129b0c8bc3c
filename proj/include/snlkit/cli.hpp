#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "snlkit/io.hpp"

namespace snlkit::cli {

/// Command-line flags. Unset flags fall back on the instance's "params" block
/// and then on the defaults below.
struct Options {
  std::optional<double> tol;
  std::optional<std::uint64_t> seed;
  std::optional<int> trials;
  std::optional<long> samples;
  std::optional<std::string> json_out;
  std::optional<double> lambda;
  std::optional<double> eta;
  std::optional<long> size;
  std::optional<double> theta_max;
};

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitError = 2;
inline constexpr int kExitInconclusive = 3;

const std::vector<std::string>& commands();

/// Runs one command against a parsed instance. Throws snlkit::Error.
io::Report execute(const std::string& command, const io::Instance& inst, const Options& opts);

/// `fixtures <name>`.
io::Report run_fixture(const std::string& name, const Options& opts);

int exit_code(Status s);

/// Full driver: load, execute, print the report to `out` (and to --json when
/// given), map errors to exit code 2 with a message on `err`.
int run(const std::string& command, const std::string& target, const Options& opts,
        std::ostream& out, std::ostream& err);

}  // namespace snlkit::cli
