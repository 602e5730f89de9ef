#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace vknot::cli {

/// Exit-code contract shared by every subcommand.
enum ExitCode : int {
  kSuccess = 0,
  kOtherError = 1,
  kInputError = 2,
  kOracleMismatch = 3,
  kVerificationFailure = 4,
};

enum class Format { Json, Text };

struct RunReport {
  std::string command;
  nlohmann::ordered_json items = nlohmann::ordered_json::array();
  std::vector<std::string> lines;  // one text line per item
  std::vector<std::string> diagnostics;
  int exit_status = kSuccess;

  /// Raises the exit status, keeping the more specific failure.
  void fail(int status);
};

/// Splits batch text into codes: one per line, '#' comments and blank lines skipped.
std::vector<std::string> read_code_lines(const std::string& text);

RunReport cmd_validate(const std::vector<std::string>& inputs);

struct InvariantOptions {
  bool oracle = false;       // recompute the bracket by explicit state sum
  bool parity_lint = false;  // compare classical and virtual parities
};
RunReport cmd_invariants(const std::vector<std::string>& inputs, const InvariantOptions& options = {});

/// Per-state traces of the explicit state sum.
RunReport cmd_oracle(const std::vector<std::string>& inputs, unsigned colors = 2);

struct ColorOptions {
  unsigned colors = 3;
  bool enumerate = false;
  std::size_t limit = 1000;
};
RunReport cmd_color(const std::vector<std::string>& inputs, const ColorOptions& options);

struct GraphOptions {
  bool matchings = false;
  std::optional<unsigned> color;
  std::optional<std::size_t> translate;
  bool verify = false;
};
/// `source` names the graph in the report; `text` is its file contents.
RunReport cmd_graph(const std::string& source, const std::string& text, const GraphOptions& options);

struct SearchOptions {
  std::size_t max_crossings = 4;
  std::size_t components = 2;
  std::optional<std::size_t> limit;
  bool non_split = false;  // drop hits whose components do not interact
};
RunReport cmd_search(const SearchOptions& options);

/// Stable rendering: JSON with fixed key order, or one line per item.
std::string render(const RunReport& report, Format format);

}  // namespace vknot::cli
