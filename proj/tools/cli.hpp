#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace oscalg::cli {

enum class Command { classify, verify, closure, moments, report };
enum class Format { text, json };

struct RunConfig {
  Command command = Command::classify;
  std::vector<std::string> inputs;
  std::size_t truncation = 16;   // -M
  double tol = 1e-10;
  std::size_t max_dim = 24;
  std::size_t max_depth = 8;
  std::size_t j_max = 3;
  Format format = Format::text;
  bool verdict_exit = false;
};

/// Raised when the command line asks for usage text.
struct HelpRequested {
  std::string text;
};

/// Parses argv-style arguments (without the program name). Throws
/// HelpRequested for --help and oscalg::InputError for malformed command
/// lines; main() maps the latter to exit 2.
RunConfig parse_args(const std::vector<std::string>& args);

/// Exit code of a run that completed (i.e. produced its document):
///   3  internal consistency failure (report-mode verdict disagreement),
///   1  infinite/fail verdict, when opted in via --verdict-exit,
///   0  otherwise.
/// Input problems never reach this mapping; they exit 2.
int completion_exit_code(bool verdict_exit, bool verdict_ok, bool internal_failure);

/// Processes every input in order, writing documents to `out` and diagnostics
/// to `err`. Returns the worst exit code over all inputs:
/// 0 ok, 1 infinite/fail verdict (with --verdict-exit), 2 input error,
/// 3 internal consistency failure.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace oscalg::cli
