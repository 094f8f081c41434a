#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace weavekit {

enum class Command {
  kHecke,
  kJones,
  kAlexander,
  kHomfly,
  kKhovanov,
  kIntegralKhovanov,
  kStats,
  kTwist,
  kBounds,
  kCorrelate,
  kVerifyAll,
};

enum class Format { kText, kJson, kCsv, kSvg };

struct RunConfig {
  Command command = Command::kJones;
  std::vector<long> ns;  // from -n or --range, ascending
  Format format = Format::kText;
  std::string out;       // empty: stdout
  bool conjectural = false;
  bool oracle = false;
  unsigned jobs = 1;
  std::string volumes;
  long max_n = 20;
  long k = 0;            // 0: command default
};

enum ExitCode { kOk = 0, kVerificationFailure = 1, kUsageError = 2, kIoError = 3 };

/// Runs one command. Output goes to `out` unless config.out is set;
/// diagnostics (including skipped n values) go to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv and runs. Returns an ExitCode.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

std::optional<Command> parse_command(const std::string& name);
/// "A..B" with A <= B.
std::optional<std::pair<long, long>> parse_range(const std::string& text);

}  // namespace weavekit
