#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "chiclass/jobs.hpp"

namespace {

int max_dim_from_env() {
  const char* v = std::getenv("CHICLASS_MAX_DIM");
  if (!v || !*v) return chiclass::kDefaultMaxDim;
  char* end = nullptr;
  const long x = std::strtol(v, &end, 10);
  if (*end != '\0' || x < 1 || x > 64) {
    std::cerr << "warning: ignoring invalid CHICLASS_MAX_DIM='" << v << "'\n";
    return chiclass::kDefaultMaxDim;
  }
  return static_cast<int>(x);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Hirzebruch chi_y classes of complete intersections"};
  app.require_subcommand(1, 1);

  std::string input;
  std::string format = "table";
  std::optional<int> order;

  for (auto name : chiclass::job_commands()) {
    auto* sub = app.add_subcommand(std::string(name));
    sub->add_option("--input,-i", input, "JSON job file ('-' for stdin)")->required();
    sub->add_option("--format,-f", format, "Output format")->check(CLI::IsMember({"table", "json"}));
    sub->add_option("--order", order, "Truncation order (must be >= ambient dimension)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : chiclass::kExitInputError;
  }

  chiclass::JobSpec job;
  job.command = app.get_subcommands().front()->get_name();
  job.format = format == "json" ? chiclass::OutputFormat::Json : chiclass::OutputFormat::Table;
  job.order = order;
  job.max_dim = max_dim_from_env();

  try {
    if (input == "-") {
      job.payload = nlohmann::json::parse(std::cin);
    } else {
      std::ifstream in(input);
      if (!in) {
        std::cerr << "error: --input: cannot open '" << input << "'\n";
        return chiclass::kExitInputError;
      }
      job.payload = nlohmann::json::parse(in);
    }
  } catch (const nlohmann::json::parse_error& e) {
    std::cerr << "error: --input: malformed JSON: " << e.what() << "\n";
    return chiclass::kExitInputError;
  }

  const chiclass::Report report = chiclass::run(job);
  (report.exit_code == chiclass::kExitInputError ? std::cerr : std::cout) << report.text;
  return report.exit_code;
}
