#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hfsim/hesitant.hpp"

namespace hfsim::cli {

enum class Command { distance, similarity, rank, reproduce_paper };
enum class OutputFormat { plain, csv, json };

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitToleranceFailure = 2;

struct RunConfig {
  Command command = Command::reproduce_paper;
  std::string input;  ///< empty for reproduce-paper means the bundled matrix
  std::string measure;
  std::vector<double> p_values;
  std::optional<std::string> transform;  ///< s0 only
  std::optional<std::string> base;       ///< base distance for s0 and d18
  ExtensionPolicy policy = ExtensionPolicy::pessimistic;
  OutputFormat format = OutputFormat::plain;
};

Command parse_command(std::string_view name);
OutputFormat parse_format(std::string_view name);

/// Checks names and required options before anything is computed; throws
/// InvalidSpec with a user-facing message.
void validate(const RunConfig& config);

/// Executes one command, writing the report to `out` and diagnostics to `err`.
/// Returns kExitOk, kExitInputError, or kExitToleranceFailure.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace hfsim::cli
