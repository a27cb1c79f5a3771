#pragma once

#include <string>

#include "duelbench/experiment.hpp"

namespace duelbench {

/// Experiment settings plus output options, as read from a config file and
/// then overridden by command-line flags.
///
/// File format (TOML subset): `key = value` lines, `#` comments, values are
/// integers, reals, booleans, "strings" or [lists]. Top-level keys:
///
///   seed horizon arms games iterations min_gap checkpoints max_attempts
///   policies out serial threads
///
/// followed by optional per-policy sections:
///
///   [sup-klucb]  c1 = 0.4   c2 = 5.04
///   [rucb]       alpha = 1.01
///   [dts]        alpha = 0.51
struct CliConfig {
  ExperimentConfig experiment;
  std::string out_dir = "duelbench-out";
};

/// Throws ValidationError with a line number on malformed input or unknown
/// keys.
CliConfig parse_config(const std::string& text);

/// Canonical text form; parse_config(to_config_text(c)) reproduces c.
std::string to_config_text(const CliConfig& config);

}  // namespace duelbench
