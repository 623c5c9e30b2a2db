#pragma once

#include <iosfwd>
#include <string>

#include "cli/config.hpp"

namespace cavity::cli {

// Each command writes its artifacts under cfg.out_dir and returns an
// ExitCode. Library exceptions propagate; run_command maps them.
int run_spectrum(const RunConfig& cfg, std::ostream& log);
int run_dynamics(const RunConfig& cfg, std::ostream& log);
int run_noon(const RunConfig& cfg, std::ostream& log);
int run_validate(const RunConfig& cfg, std::ostream& log);

// Loads the configuration, dispatches on `command` and converts failures
// into exit codes: 2 for configuration errors, 3 for numerical failures,
// 4 for failed validation.
int run_command(const std::string& command, const std::string& config_text,
                const std::string& config_origin, const Overrides& overrides,
                std::ostream& log, std::ostream& err);

}  // namespace cavity::cli
