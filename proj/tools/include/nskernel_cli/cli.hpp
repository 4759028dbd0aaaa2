#pragma once

#include <string>
#include <vector>

#include "nskernel_cli/config.hpp"

namespace nskernel::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitContract = 1;
inline constexpr int kExitNumerical = 2;

struct CommandContext {
  std::string out_dir = ".";
  std::string model_path;
  int threads = 0;
};

const std::vector<std::string>& command_names();

// Runs one command; throws on failure.
void run_command(const std::string& command, const RunConfig& config, const CommandContext& ctx);

// Full front end: argument parsing, logging setup, exit-code mapping.
int main_entry(int argc, char** argv);

}  // namespace nskernel::cli
