#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace rwg::cli {

/// Everything a command needs, parsed from the command line. `to_args` gives
/// the canonical command line, which parses back to an equal config.
struct RunConfig {
  std::string command;  // walk, bounds, cutoff, simulate, spectrum, fourier, factorize, ergodic
  std::string mode;     // simulate: sut|coupling|coupon|switzer|visits
                        // factorize: urban|circle-pq|charge|no-power
  std::string walk;
  std::string group;
  std::string family;
  std::string target;
  std::vector<std::string> support;
  std::optional<std::size_t> k_max;
  std::optional<std::size_t> k;
  std::optional<int> n;
  std::vector<int> ns;
  std::vector<double> eps;
  std::vector<double> c;
  std::vector<double> p;
  std::optional<double> a;
  std::optional<double> b;
  std::optional<double> growth_a;
  std::optional<double> growth_d;
  std::optional<std::size_t> trials;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> threads;
  bool report = false;
  std::string out;
  std::string long_out;

  std::vector<std::string> to_args() const;
  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

/// Parse result: either a config, or text to print (help) and an exit code.
struct ParseOutcome {
  std::optional<RunConfig> config;
  int exit_code = 0;
  std::string message;
};
ParseOutcome parse_command_line(const std::vector<std::string>& args);

/// Shortest decimal text that reads back to the same double.
std::string format_double(double x);

/// Runs the configured command, writing its artifact to `out` and notes to
/// `err`. Library errors propagate as rwg::Error.
void run(RunConfig config, std::ostream& out, std::ostream& err);

}  // namespace rwg::cli
