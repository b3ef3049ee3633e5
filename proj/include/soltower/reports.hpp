#pragma once

// Command implementations behind the CLI. Each command returns a JSON
// report (stable key order, every exact number as a string) and an exit
// code; nothing here touches stdout.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "soltower/errors.hpp"
#include "soltower/exact_arith.hpp"

namespace soltower {

using Report = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailure = 1,
  kExitInvalidInput = 2,
  kExitSizeGuard = 3,
  kExitIo = 4,
};

int exit_code_for(Errc code);

struct RunConfig {
  std::vector<Integer> moduli;
  std::vector<Integer> winding;
  unsigned long range_from = 0;
  unsigned long range_to = 0;
  std::string epsilon = "1/2";
  unsigned long depth = 2;
  std::optional<unsigned long> n1;
  std::optional<unsigned long> stage;
  std::vector<std::vector<Integer>> loops;
  std::uint64_t size_guard = 1'000'000;
  std::size_t samples = 20;
  bool timing = false;
  std::filesystem::path out_dir;
};

struct CommandResult {
  Report report;
  int exit_code = kExitOk;
  std::vector<std::string> warnings;
};

// "2,3" -> {2, 3}.
std::vector<Integer> parse_integer_list(const std::string& text);
// "0..3" -> {0, 3}; a single "2" means 2..2.
std::pair<unsigned long, unsigned long> parse_range(const std::string& text);
// "3,0;-2,1" -> {{3, 0}, {-2, 1}}.
std::vector<std::vector<Integer>> parse_loop_family(const std::string& text);
// SOLTOWER_SIZE_GUARD when set and valid.
std::optional<std::uint64_t> size_guard_from_env();

CommandResult cmd_certify(const RunConfig& config);
CommandResult cmd_tower(const RunConfig& config);
CommandResult cmd_combine(const RunConfig& config);
// Writes CSV files under config.out_dir: image_n<stage>.csv for --stage,
// level_<n>.csv per tower level when tower options are given.
CommandResult cmd_export(const RunConfig& config, bool tower_requested);

// Error report for a failed command.
CommandResult error_result(const std::string& command, const Error& error);

std::string render(const Report& report);
// Write to a sibling temp file and rename over `path`. Throws Error(Io).
void write_atomically(const std::filesystem::path& path, const std::string& text);

}  // namespace soltower
