#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace morita::cli {

enum class Status { Pass, Fail, Rejection };

std::string_view to_string(Status s) noexcept;

/// What a subcommand prints: status is Pass only if every identity it
/// asserted held.
struct RunReport {
  std::string command;
  Status status = Status::Pass;
  nlohmann::json payload = nlohmann::json::object();
  std::vector<std::string> diagnostics;

  nlohmann::json to_json() const;
  void fail(std::string why) {
    status = Status::Fail;
    diagnostics.push_back(std::move(why));
  }
};

/// Exit codes.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;   // failed identity or a rejection
inline constexpr int kExitUsage = 2;  // bad arguments or input files

/// Runs one command line (args excludes the program name), writing the
/// report to `out` and usage problems to `err`. Never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace morita::cli
