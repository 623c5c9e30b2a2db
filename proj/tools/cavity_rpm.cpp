// cavity_rpm: spectra, dynamics and N00N statistics for coupled cavities.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cli/commands.hpp"

namespace {

struct Flags {
  std::string config_path;
  cavity::cli::Overrides ov;
};

void add_common_flags(CLI::App* sub, Flags& f) {
  auto& ov = f.ov;
  sub->add_option("--config", f.config_path, "JSON run configuration");
  sub->add_option("--out", ov.out_dir, "output directory");
  sub->add_option("--model", ov.models,
                  "jc | harmonic | anharmonic-rpm | anharmonic-oracle "
                  "(repeatable)");
  sub->add_option("--N", ov.n_photons, "photon number");
  sub->add_option("--g", ov.g, "atom-photon coupling");
  sub->add_option("--J", ov.j_tun, "inter-cavity tunneling rate");
  sub->add_option("--omega0", ov.omega0, "cavity frequency");
  sub->add_option("--sigma", ov.sigma, "dressed branch, +1 or -1");
  sub->add_option("--epsilon", ov.epsilon, "Lorentzian broadening");
  sub->add_option("--tmax", ov.t_max, "end of the time grid");
  sub->add_option("--dt", ov.dt, "time step");
  sub->add_option("--bins", ov.bins, "histogram bins per axis");
  sub->add_flag("--compare", ov.compare,
                "compare recursion against exact diagonalization");
  sub->add_flag("--first-transfer", ov.first_transfer,
                "report the first-transfer time per model");
  sub->add_option("--suite", ov.suite, "validation checks to run");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectra, dynamics and N00N statistics of coupled cavities"};
  app.require_subcommand(1, 1);

  Flags flags;
  for (const char* name : {"spectrum", "dynamics", "noon", "validate"}) {
    add_common_flags(app.add_subcommand(name), flags);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : cavity::cli::kConfigError;
  }

  std::string text;
  if (!flags.config_path.empty()) {
    std::ifstream in(flags.config_path, std::ios::binary);
    if (!in) {
      std::cerr << "config error: cannot read " << flags.config_path << '\n';
      return cavity::cli::kConfigError;
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }

  const std::string command = app.get_subcommands().front()->get_name();
  return cavity::cli::run_command(
      command, text, flags.config_path.empty() ? "<flags>" : flags.config_path,
      flags.ov, std::cout, std::cerr);
}
