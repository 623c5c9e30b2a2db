#include "cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <numbers>
#include <ostream>

#include "cavity/dynamics.hpp"
#include "cavity/effective.hpp"
#include "cavity/entanglement.hpp"
#include "cavity/errors.hpp"
#include "cavity/harmonic.hpp"
#include "cavity/jc.hpp"
#include "cavity/rpm.hpp"
#include "cli/output.hpp"
#include "cli/parallel.hpp"
#include "cli/validation.hpp"

namespace cavity::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Spectra {
  LineSpectrum rho00;
  LineSpectrum rhoN0;
};

ModelParams with_photons(ModelParams p, int n) {
  p.n_photons = n;
  return p;
}

Spectra line_spectra(Model m, const ModelParams& p) {
  switch (m) {
    case Model::jc: {
      auto [a, b] = jc::jc_line_spectra(p, p.n_photons);
      return {std::move(a), std::move(b)};
    }
    case Model::harmonic: {
      auto [a, b] = harmonic::harmonic_line_spectra(p);
      return {std::move(a), std::move(b)};
    }
    case Model::anharmonic_rpm:
    case Model::anharmonic_oracle:
      break;
  }
  auto [a, b] = effective::sector_line_spectra(p);
  return {std::move(a), std::move(b)};
}

// Gershgorin interval of the sector matrix, padded by `pad`.
std::pair<double, double> sector_bounds(const ModelParams& p, double pad) {
  const auto h = effective::build_sector_hamiltonian(p);
  double lo = h.diag[0], hi = h.diag[0];
  for (int k = 0; k < h.dimension(); ++k) {
    double radius = 0.0;
    if (k > 0) radius += std::abs(h.offdiag[k - 1]);
    if (k + 1 < h.dimension()) radius += std::abs(h.offdiag[k]);
    lo = std::min(lo, h.diag[k] - radius);
    hi = std::max(hi, h.diag[k] + radius);
  }
  return {lo - pad, hi + pad};
}

std::vector<double> density_real(const LineSpectrum& spec,
                                 const std::vector<double>& grid, double eps) {
  std::vector<double> out(grid.size());
  parallel_for(grid.size(), [&](std::size_t b, std::size_t e) {
    const auto part = smoothed_density(
        spec, std::span<const double>(grid).subspan(b, e - b), eps);
    for (std::size_t i = b; i < e; ++i) out[i] = part[i - b].real();
  });
  return out;
}

rpm::RpmSpectra rpm_density(const ModelParams& p,
                            const std::vector<double>& grid, double eps) {
  rpm::RpmSpectra out;
  out.rho00.resize(grid.size());
  out.rhoN0.resize(grid.size());
  parallel_for(grid.size(), [&](std::size_t b, std::size_t e) {
    const auto part = rpm::rpm_spectra(
        p, std::span<const double>(grid).subspan(b, e - b), eps);
    std::copy(part.rho00.begin(), part.rho00.end(), out.rho00.begin() + b);
    std::copy(part.rhoN0.begin(), part.rhoN0.end(), out.rhoN0.begin() + b);
  });
  return out;
}

AmplitudeSeries synthesize(const LineSpectrum& spec,
                           const std::vector<double>& times) {
  AmplitudeSeries s;
  s.times = times;
  s.values.resize(times.size());
  parallel_for(times.size(), [&](std::size_t b, std::size_t e) {
    const auto part = amplitude_from_lines(
        spec, std::span<const double>(times).subspan(b, e - b));
    std::copy(part.values.begin(), part.values.end(), s.values.begin() + b);
  });
  return s;
}

void write_lines_csv(const fs::path& path, const Spectra& s) {
  CsvWriter csv({"E", "w00", "wN0"});
  for (std::size_t i = 0; i < s.rho00.size(); ++i) {
    csv.add_row({s.rho00[i].energy, s.rho00[i].weight.real(),
                 s.rhoN0[i].weight.real()});
  }
  csv.save(path);
}

}  // namespace

int run_spectrum(const RunConfig& cfg, std::ostream& log) {
  const Model model = cfg.models.front();
  ModelParams p = cfg.params;
  if (model == Model::harmonic) p.g = 0.0;
  const fs::path out = cfg.out_dir;

  std::optional<Spectra> lines;
  if (model != Model::anharmonic_rpm) lines = line_spectra(model, p);

  double lo = 0.0, hi = 0.0;
  if (model == Model::jc) {
    lo = lines->rho00.lines().front().energy - 1.0;
    hi = lines->rho00.lines().back().energy + 1.0;
  } else {
    std::tie(lo, hi) = sector_bounds(p, 10.0 * cfg.epsilon);
  }
  lo = cfg.energy_min.value_or(lo);
  hi = cfg.energy_max.value_or(hi);
  const auto grid =
      linear_grid(lo, hi, static_cast<std::size_t>(cfg.energy_points));

  std::vector<double> rho00, rhoN0;
  if (model == Model::anharmonic_rpm) {
    auto r = rpm_density(p, grid, cfg.epsilon);
    rho00 = std::move(r.rho00);
    rhoN0 = std::move(r.rhoN0);
  } else {
    rho00 = density_real(lines->rho00, grid, cfg.epsilon);
    rhoN0 = density_real(lines->rhoN0, grid, cfg.epsilon);
  }

  CsvWriter csv({"E", "rho00", "rhoN0"});
  for (std::size_t i = 0; i < grid.size(); ++i) {
    csv.add_row({grid[i], rho00[i], rhoN0[i]});
  }
  csv.save(out / "spectrum.csv");

  json meta = sidecar(cfg.to_json());
  meta["model"] = model_name(model);
  meta["energy_range"] = {lo, hi};
  meta["files"] = {"spectrum.csv"};
  if (lines) {
    write_lines_csv(out / "lines.csv", *lines);
    meta["files"].push_back("lines.csv");
    meta["line_count"] = lines->rho00.size();
  }

  int code = kOk;
  if (cfg.compare) {
    if (p.n_photons % 2 != 0) {
      throw ConfigError("--compare needs an even photon number");
    }
    const auto rpm_rho = rpm_density(p, grid, cfg.epsilon);
    const auto oracle = effective::sector_line_spectra(p);
    const auto o00 = density_real(oracle.first, grid, cfg.epsilon);
    const auto oN0 = density_real(oracle.second, grid, cfg.epsilon);
    double d00 = 0.0, dN0 = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      d00 = std::max(d00, std::abs(rpm_rho.rho00[i] - o00[i]));
      dN0 = std::max(dN0, std::abs(rpm_rho.rhoN0[i] - oN0[i]));
    }
    const double tol = 1e-8;
    json report = sidecar(cfg.to_json());
    report["comparison"] = {{"models", {"anharmonic-rpm", "anharmonic-oracle"}},
                            {"linf_rho00", d00},
                            {"linf_rhoN0", dN0},
                            {"tolerance", tol},
                            {"passed", d00 <= tol && dN0 <= tol}};
    write_json(out / "compare.json", report);
    meta["files"].push_back("compare.json");
    log << "compare: linf rho00 " << d00 << ", rhoN0 " << dN0 << '\n';
    if (!(d00 <= tol && dN0 <= tol)) code = kValidationFailure;
  }
  write_json(out / "spectrum.json", meta);
  log << "spectrum: " << grid.size() << " points written to "
      << (out / "spectrum.csv").string() << '\n';
  return code;
}

int run_dynamics(const RunConfig& cfg, std::ostream& log) {
  const fs::path out = cfg.out_dir;
  const double t_max = cfg.t_max.value_or(dynamics::kDefaultTMax);
  const double dt = cfg.dt.value_or(dynamics::default_time_step(cfg.params));

  std::vector<std::string> header = {"t"};
  for (Model m : cfg.models) {
    const auto name = model_name(m);
    for (const char* which : {"return", "transition"}) {
      for (const char* part : {"re", "im", "abs"}) {
        header.push_back(name + "_" + which + "_" + part);
      }
    }
  }
  CsvWriter csv(header);

  json meta = sidecar(cfg.to_json());
  meta["t_max"] = t_max;
  meta["dt"] = dt;
  meta["files"] = {"dynamics.csv"};

  if (t_max > 0.0) {
    const auto times = uniform_time_grid(t_max, dt);
    std::vector<std::pair<AmplitudeSeries, AmplitudeSeries>> series;
    json transfer = json::object();
    for (Model m : cfg.models) {
      ModelParams p = cfg.params;
      if (m == Model::harmonic) p.g = 0.0;
      const auto spec = line_spectra(m, p);
      series.emplace_back(synthesize(spec.rho00, times),
                          synthesize(spec.rhoN0, times));
      if (cfg.first_transfer) {
        const auto tt =
            dynamics::first_transfer_time(series.back().second,
                                          cfg.transfer_threshold);
        transfer[model_name(m)] = tt ? json(*tt) : json(nullptr);
      }
    }
    std::vector<double> row;
    for (std::size_t i = 0; i < times.size(); ++i) {
      row.assign(1, times[i]);
      for (const auto& [ret, trans] : series) {
        for (const Complex c : {ret.values[i], trans.values[i]}) {
          row.push_back(c.real());
          row.push_back(c.imag());
          row.push_back(std::abs(c));
        }
      }
      csv.add_row(row);
    }
    if (cfg.first_transfer) {
      json doc = sidecar(cfg.to_json());
      doc["threshold"] = cfg.transfer_threshold;
      doc["first_transfer_time"] = transfer;
      doc["pi_over_J"] = cfg.params.j_tun > 0.0
                             ? json(std::numbers::pi / cfg.params.j_tun)
                             : json(nullptr);
      write_json(out / "first_transfer.json", doc);
      meta["files"].push_back("first_transfer.json");
    }
  } else if (cfg.first_transfer) {
    json doc = sidecar(cfg.to_json());
    doc["first_transfer_time"] = json::object();
    write_json(out / "first_transfer.json", doc);
    meta["files"].push_back("first_transfer.json");
  }

  csv.save(out / "dynamics.csv");
  write_json(out / "dynamics.json", meta);
  log << "dynamics: written to " << (out / "dynamics.csv").string() << '\n';
  return kOk;
}

int run_noon(const RunConfig& cfg, std::ostream& log) {
  const fs::path out = cfg.out_dir;
  const std::vector<int> photon_numbers =
      cfg.n_sweep.empty() ? std::vector<int>{cfg.params.n_photons}
                          : cfg.n_sweep;

  json meta = sidecar(cfg.to_json());
  meta["axes"] = "moduli (|c0|, |cN|)";
  meta["bins"] = cfg.bins;
  meta["results"] = json::array();

  for (Model m : cfg.models) {
    for (int n : photon_numbers) {
      ModelParams p = with_photons(cfg.params, n);
      if (m == Model::harmonic) p.g = 0.0;
      const auto spec = line_spectra(m, p);

      double t_max = 0.0, dt = 0.0;
      if (p.j_tun > 0.0) {
        const auto w = entanglement::default_sampling_window(p, spec.rho00);
        t_max = w.t_max;
        dt = w.dt;
      } else {
        dt = dynamics::default_time_step(p);
      }
      t_max = cfg.t_max.value_or(t_max);
      dt = cfg.dt.value_or(dt);

      const auto times = uniform_time_grid(t_max, dt);
      const auto ret = synthesize(spec.rho00, times);
      const auto trans = synthesize(spec.rhoN0, times);
      const auto hist = entanglement::sample_joint(ret, trans, cfg.bins);
      const auto summary =
          entanglement::noon_feasibility(ret, trans, cfg.noon_threshold);

      const std::string stem = "noon_" + model_name(m) + "_N" + std::to_string(n);
      CsvWriter csv({"c0_center", "cN_center", "mass"});
      const double w = hist.bin_width();
      for (int i = 0; i < hist.bins(); ++i) {
        for (int j = 0; j < hist.bins(); ++j) {
          csv.add_row({(i + 0.5) * w, (j + 0.5) * w, hist.at(i, j)});
        }
      }
      csv.save(out / (stem + "_histogram.csv"));

      meta["results"].push_back({{"model", model_name(m)},
                                 {"N", n},
                                 {"histogram", stem + "_histogram.csv"},
                                 {"n_samples", hist.n_samples()},
                                 {"t_max", t_max},
                                 {"dt", dt},
                                 {"max_score", summary.max_score},
                                 {"argmax_time", summary.argmax_time},
                                 {"threshold", cfg.noon_threshold},
                                 {"fraction_above", summary.fraction_above},
                                 {"off_axis_mass_0.05", hist.mass_off_axes(0.05)}});
      log << "noon: " << model_name(m) << " N=" << n
          << " max score " << summary.max_score << '\n';
    }
  }
  write_json(out / "noon.json", meta);
  return kOk;
}

int run_validate(const RunConfig& cfg, std::ostream& log) {
  ValidationOptions opt;
  opt.inject_hopping_fault = cfg.inject_hopping_fault;

  json report = sidecar(cfg.to_json());
  report["checks"] = json::array();
  bool all = true;
  for (const auto& name : cfg.suite) {
    const auto r = run_check(name, opt);
    all = all && r.passed;
    report["checks"].push_back(r.to_json());
    log << (r.passed ? "PASS " : "FAIL ") << r.name << "  max_dev="
        << r.max_deviation << " tol=" << r.tolerance << "  " << r.detail
        << '\n';
  }
  report["passed"] = all;
  write_json(fs::path(cfg.out_dir) / "validation_report.json", report);
  return all ? kOk : kValidationFailure;
}

int run_command(const std::string& command, const std::string& config_text,
                const std::string& config_origin, const Overrides& overrides,
                std::ostream& log, std::ostream& err) {
  try {
    const RunConfig cfg =
        load_config(command, config_text, config_origin, overrides);
    if (command == "spectrum") return run_spectrum(cfg, log);
    if (command == "dynamics") return run_dynamics(cfg, log);
    if (command == "noon") return run_noon(cfg, log);
    if (command == "validate") return run_validate(cfg, log);
    err << "config error: unknown command '" << command << "'\n";
    return kConfigError;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const UnsupportedConfiguration& e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const InvalidArgument& e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const NumericalFailure& e) {
    err << "numerical failure at index " << e.index() << ": " << e.what()
        << '\n';
    return kNumericalFailure;
  }
}

}  // namespace cavity::cli
