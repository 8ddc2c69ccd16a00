#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "locbmo/config.hpp"

namespace locbmo {

/// Thrown by commands on numerical failures (exit code 2 at the CLI).
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Execute one experiment command against a parsed config, writing CSV/JSON
/// artifacts into out_dir. Returns the paths written. Deterministic for a
/// fixed config: reruns produce byte-identical files.
std::vector<std::string> run_command(const std::string& command, const Config& config,
                                     const std::string& out_dir,
                                     std::optional<std::uint64_t> seed_override = {});

const std::vector<std::string>& known_commands();

}  // namespace locbmo
