#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "wblab/cli/config.hpp"

namespace wblab::cli {

struct GlobalOptions {
  std::filesystem::path out = "wblab_out";
  int jobs = 1;
  std::uint64_t seed = 1;
};

// Each command reads and validates its whole configuration first (throwing
// ConfigKeyError), then computes and writes into options.out. The return
// value is the process exit code.
int cmd_simulate(const RunConfig& config, const GlobalOptions& options);
int cmd_decay_scan(const RunConfig& config, const GlobalOptions& options);
int cmd_strichartz_scan(const RunConfig& config, const GlobalOptions& options);
int cmd_bilinear_scan(const RunConfig& config, const GlobalOptions& options);
int cmd_lifespan_sweep(const RunConfig& config, const GlobalOptions& options);
/// Fast internal consistency checks; 0 if all pass, 1 otherwise.
int cmd_selftest(const RunConfig& config, const GlobalOptions& options);

/// Command-line entry point: parses argv, dispatches, maps errors to exit codes
/// (2 for configuration problems, 1 for runtime failures).
int run(int argc, char** argv);

}  // namespace wblab::cli
