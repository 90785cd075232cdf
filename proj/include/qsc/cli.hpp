#pragma once

#include <optional>
#include <string>
#include <vector>

namespace qsc::cli {

enum class Subcommand { Hilbert, Slope, Tables, Walls, Poincare, Verify, Minors };
enum class Format { Markdown, Json };

struct Command {
  Subcommand sub = Subcommand::Verify;
  Format format = Format::Markdown;

  // hilbert
  std::optional<std::string> kclass;
  std::optional<std::string> bidegree;  // "s,r"
  std::optional<std::string> twist;     // "i,j"
  bool slope = false;

  // slope, walls
  std::optional<std::string> poly;
  std::optional<long> gamma;
  std::optional<std::string> alpha;

  // tables
  int which = 0;

  // poincare
  std::optional<std::string> expr;

  // verify
  bool all = false;

  // minors
  std::optional<std::string> matrix;
  std::optional<std::string> rows;
  std::optional<std::string> cols;
};

/// Bad command lines. `usage` is the help text of the relevant (sub)command.
struct UsageError {
  std::string message;
  std::string usage;
};

/// Arguments after the program name. Throws UsageError; `--help` is
/// reported as a UsageError with an empty message.
Command parse(const std::vector<std::string>& args);

struct Outcome {
  std::string out;
  std::string err;
  int exit_code = 0;
};

/// 0 ok, 1 a verification check failed, 2 usage or input error, 3 internal
/// invariant violation.
Outcome run(const Command& cmd);

/// parse + run. `env_format` (QSC_FORMAT) wins over --format.
Outcome main_entry(const std::vector<std::string>& args,
                   const std::optional<std::string>& env_format = std::nullopt);

}  // namespace qsc::cli
