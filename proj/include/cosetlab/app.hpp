#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

#include "cosetlab/group.hpp"
#include "json.hpp"

namespace cosetlab {

/// Process exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitFinding = 1,  // violation for a proven k, failed lemma, or internal inconsistency
  kExitConfig = 2,
  kExitCap = 3,
};

struct RunConfig {
  std::string command;
  std::string group;  // spec file path or family name
  int k_min = 2;
  int k_max = 4;
  unsigned jobs = 1;
  std::filesystem::path cache_dir = ".cosetlab-cache";  // empty disables caching
  std::optional<std::filesystem::path> report_path;
  std::uint64_t seed = 0;
  std::size_t max_order = 2048;
  std::size_t max_subgroups = 10'000;
  std::size_t max_cliques = 1'000'000;
  std::uint64_t max_census = 1'000'000;
  std::uint64_t samples = 10'000;
  std::optional<std::array<std::size_t, 3>> triple;
};

/// Throws Error(InvalidArgument) on out-of-range values.
void validate(const RunConfig& cfg);

/// "3..4" or "3".
std::pair<int, int> parse_k_range(const std::string& text);

/// File path when it exists or ends in ".json", otherwise a family name.
GroupSpec resolve_group_spec(const std::string& group);

struct CommandResult {
  nlohmann::json report;
  int exit_code = kExitOk;
};

/// Runs verify / lemmas / census / subgroups and builds the report document.
/// Errors propagate as cosetlab::Error.
CommandResult run_command(const RunConfig& cfg, std::ostream& warn);

/// "S4, order 24, 30 subgroups" per catalog group.
void print_catalog(const RunConfig& cfg, std::ostream& out, std::ostream& warn);

/// Full command-line entry point: parses argv, runs, writes the report,
/// returns the process exit code.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cosetlab
