#ifndef AKIT_CLI_HPP
#define AKIT_CLI_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace akit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

struct ReportEntry {
  std::string check;
  std::string status;  // PASS, FAIL, INFO or ERROR
  std::optional<std::string> witness;
  std::optional<std::string> value;
};

struct Report {
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::vector<ReportEntry> results;
  int exit_code = kExitOk;
};

/// One line per result: `PASS composition`, `INFO grdegU = 2/1`,
/// `FAIL composition = generator X; witness: X*S*U`.
std::string render_text(const Report& report);

/// {command, inputs, results: [{check, status, witness?, value?}], exit_code}.
std::string render_json(const Report& report);

/// Entry point of the `akit` tool; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace akit::cli

#endif  // AKIT_CLI_HPP
