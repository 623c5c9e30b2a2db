#include "cavity/rpm.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "cavity/errors.hpp"

namespace cavity::rpm {

namespace {

void require_even(const ModelParams& params) {
  params.validate();
  if (params.n_photons % 2 != 0) {
    throw UnsupportedConfiguration(
        "the recursive projection needs an even photon number");
  }
}

}  // namespace

double pair_energy(const ModelParams& params, int k) {
  const int half = params.n_photons / 2;
  return params.omega0 * params.n_photons +
         2.0 * sign_of(params.sigma) * params.g *
             (std::sqrt(static_cast<double>(half + k)) +
              std::sqrt(static_cast<double>(half - k)));
}

double hopping_factor(int n_photons, int k, HoppingIndexing indexing) {
  const double half = n_photons / 2;
  switch (indexing) {
    case HoppingIndexing::shifted_mutant:
      return (half + k) * (half - k + 1.0);
    case HoppingIndexing::printed:
      break;
  }
  return (half + k + 1.0) * (half - k);
}

std::vector<RpmState> rpm_trace(const ModelParams& params, Complex z,
                                const RpmOptions& options) {
  require_even(params);
  if (z.imag() == 0.0) {
    throw InvalidArgument("resolvent recursion needs Im z != 0");
  }
  const int half = params.n_photons / 2;
  const double j2 = params.j_tun * params.j_tun;

  std::vector<RpmState> trace;
  trace.reserve(half + 1);
  const Complex d0 = z - pair_energy(params, 0);
  if (!(std::abs(d0) >= options.pole_guard)) {
    throw NearPoleError("resolvent recursion hit a pole at depth 0", 0);
  }
  const Complex seed = 1.0 / d0;
  trace.push_back({0, seed, seed, z});

  for (int k = 0; k < half; ++k) {
    const auto& prev = trace.back();
    const double hop = j2 * hopping_factor(params.n_photons, k, options.indexing);
    const Complex d = z - pair_energy(params, k + 1) - hop * prev.a;
    const Complex b = hop * prev.b;
    const Complex det = d * d - b * b;
    const double mag = std::abs(det);
    if (!(mag >= options.pole_guard) || !std::isfinite(mag)) {
      throw NearPoleError(
          "resolvent recursion hit a pole at depth " + std::to_string(k), k);
    }
    trace.push_back({k + 1, d / det, b / det, z});
  }
  return trace;
}

ResolventPair rpm_resolvent(const ModelParams& params, Complex z,
                            const RpmOptions& options) {
  const auto trace = rpm_trace(params, z, options);
  return {trace.back().a, trace.back().b};
}

RpmSpectra rpm_spectra(const ModelParams& params,
                       std::span<const double> energies, double epsilon) {
  if (!(epsilon > 0.0)) throw InvalidArgument("epsilon must be positive");
  RpmSpectra out;
  out.rho00.reserve(energies.size());
  out.rhoN0.reserve(energies.size());
  for (double e : energies) {
    const auto r = rpm_resolvent(params, Complex(e, -epsilon));
    out.rho00.push_back(r.a.imag() / std::numbers::pi);
    out.rhoN0.push_back(r.b.imag() / std::numbers::pi);
  }
  return out;
}

SignSymmetryReport check_sign_symmetry(const ModelParams& params, Complex z,
                                       double tolerance) {
  ModelParams flipped_params = params;
  flipped_params.g = -params.g;
  const Complex mirror_z = 2.0 * params.omega0 * params.n_photons - z;

  SignSymmetryReport report;
  report.original = rpm_resolvent(params, z);
  report.mirrored = rpm_resolvent(flipped_params, mirror_z);
  const double scale = std::max(std::abs(report.original.a), 1e-300);
  report.max_deviation =
      std::max(std::abs(report.original.a + report.mirrored.a),
               std::abs(report.original.b + report.mirrored.b)) /
      scale;
  report.passed = report.max_deviation <= tolerance;
  return report;
}

}  // namespace cavity::rpm
