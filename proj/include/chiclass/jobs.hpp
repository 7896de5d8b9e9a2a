#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include <json.hpp>

namespace chiclass {

enum class OutputFormat { Table, Json };

inline constexpr int kDefaultMaxDim = 8;

struct JobSpec {
  std::string command;  // classes, virtual, chi-y, milnor, spectrum, nearby, verify
  nlohmann::json payload;
  OutputFormat format = OutputFormat::Table;
  std::optional<int> order;
  int max_dim = kDefaultMaxDim;
};

enum ExitCode : int { kExitOk = 0, kExitFail = 1, kExitInputError = 2 };

struct Report {
  int exit_code = kExitOk;
  std::string text;
};

std::span<const std::string_view> job_commands();

// Validates the payload and runs the job. Never throws: input errors come
// back as exit code 2 with a message naming the offending field.
Report run(const JobSpec& job);

}  // namespace chiclass
