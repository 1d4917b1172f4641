#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ftloop::cli {

enum class Format { Json, Text, Csv };

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kAnalysis = 2,
  kCapExceeded = 3,
};

struct CliConfig {
  std::string subcommand;
  std::string input;  // "-" reads stdin
  Format format = Format::Json;
  std::string top;
  std::string assign;
  std::string trajectory;
  std::string method = "enumeration";
  bool candidates = false;
  unsigned threads = 1;
  std::optional<std::size_t> product_cap;
};

/// Executes one parsed invocation. Reports go to `out`; failures write a
/// single "error: <Code>: <detail>" line to `err`.
int run(const CliConfig& config, std::istream& in, std::ostream& out, std::ostream& err);

/// Parses argv (argv[0] is the program name) and runs it.
int main_entry(const std::vector<std::string>& argv, std::istream& in, std::ostream& out,
               std::ostream& err);

}  // namespace ftloop::cli
