#pragma once

#include <nlohmann/json.hpp>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cavity/core.hpp"

namespace cavity::cli {

// Exit codes shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  kConfigError = 2,
  kNumericalFailure = 3,
  kValidationFailure = 4,
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Model { jc, harmonic, anharmonic_rpm, anharmonic_oracle };

Model parse_model(const std::string& name);
std::string model_name(Model m);

struct RunConfig {
  std::string command;
  std::string out_dir = ".";
  std::vector<Model> models = {Model::anharmonic_rpm};
  ModelParams params{100, 1.0, 1.2, 0.8, Branch::plus, 0.0};

  // spectrum
  double epsilon = 0.01;
  std::optional<double> energy_min;
  std::optional<double> energy_max;
  int energy_points = 4001;
  bool compare = false;

  // dynamics / noon
  std::optional<double> t_max;
  std::optional<double> dt;
  bool first_transfer = false;
  double transfer_threshold = 0.5;
  int bins = 50;
  double noon_threshold = 0.55;
  std::vector<int> n_sweep;

  // validate
  std::vector<std::string> suite;
  bool inject_hopping_fault = false;

  nlohmann::json to_json() const;
};

// Field overrides coming from command-line flags; unset fields keep the
// config-file (or default) value.
struct Overrides {
  std::optional<std::string> out_dir;
  std::vector<std::string> models;
  std::optional<int> n_photons;
  std::optional<double> g, j_tun, omega0, epsilon, t_max, dt;
  std::optional<int> sigma, bins;
  bool compare = false;
  bool first_transfer = false;
  std::vector<std::string> suite;
};

// Parses the JSON document `text` (may be empty) read from `origin`, then
// applies the flag overrides and validates the result. Throws ConfigError
// whose message carries "origin:line:" when the offending key can be
// located in the document.
RunConfig load_config(const std::string& command, const std::string& text,
                      const std::string& origin, const Overrides& overrides);

}  // namespace cavity::cli
