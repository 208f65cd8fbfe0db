#pragma once

// Command-line front end: eval | coeffs | verify | fit.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace salemlab::cli {

enum ExitCode : int { ok = 0, verification_failed = 1, usage_error = 2, unconverged = 3 };

struct RunConfig {
  unsigned precision_bits = 128;
  unsigned depth_cap = 36;
  double target_error = 1e-8;
  long n_max = 1024;
  std::string output_path = "-";
  std::uint64_t seed = 0;

  /// Throws std::invalid_argument outside precision [53, 512], depth [8, 40] or target <= 0.
  void validate() const;
  /// The `# config: ...` trailer line, without newline.
  std::string trailer() const;
};

/// Shortest decimal that round-trips; integral values get a trailing ".0".
std::string format_real(double x);

/// Quotes a CSV field containing a comma or quote.
std::string csv_field(const std::string& s);

/// Runs the CLI. Reads SALEMLAB_PRECISION, SALEMLAB_DEPTH and SALEMLAB_JOBS from
/// the environment; flags take precedence.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace salemlab::cli
