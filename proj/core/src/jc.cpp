#include "cavity/jc.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "cavity/errors.hpp"

namespace cavity::jc {

namespace {

void require_resonance(const ModelParams& params, const char* what) {
  if (params.delta != 0.0) {
    throw UnsupportedConfiguration(std::string(what) +
                                   " is only defined at resonance (delta = 0)");
  }
}

}  // namespace

std::array<double, 2> DressedState::fock_amplitudes() const {
  const double h = std::numbers::sqrt2 / 2.0;
  return {sign_of(branch) * h, h};
}

double jc_energy(const ModelParams& params, int n, Branch branch) {
  if (n < 0) throw InvalidArgument("photon index must be >= 0");
  const double split = std::sqrt(params.delta * params.delta +
                                 4.0 * params.g * params.g * (n + 1.0));
  return params.omega0 * (n + 0.5) + sign_of(branch) * split;
}

DressedState dressed_state(const ModelParams& params, int n, Branch branch) {
  return {n, branch, jc_energy(params, n, branch)};
}

std::pair<AmplitudeSeries, AmplitudeSeries> rabi_amplitudes(
    const ModelParams& params, int n, std::span<const double> times) {
  require_resonance(params, "Rabi dynamics");
  if (n < 1) throw InvalidArgument("Rabi dynamics needs n >= 1");

  const double rabi = 2.0 * params.g * std::sqrt(static_cast<double>(n));
  const double carrier = params.omega0 * (n - 0.5);

  AmplitudeSeries ret, trans;
  ret.times.assign(times.begin(), times.end());
  trans.times = ret.times;
  ret.values.reserve(times.size());
  trans.values.reserve(times.size());
  for (double t : times) {
    const Complex phase = std::polar(1.0, -carrier * t);
    ret.values.push_back(phase * std::cos(rabi * t));
    trans.values.push_back(Complex(0.0, -1.0) * phase * std::sin(rabi * t));
  }
  return {std::move(ret), std::move(trans)};
}

std::pair<LineSpectrum, LineSpectrum> jc_line_spectra(const ModelParams& params,
                                                      int n) {
  require_resonance(params, "JC line spectra");
  if (n < 1) throw InvalidArgument("JC line spectra need n >= 1");

  const double e_plus = jc_energy(params, n - 1, Branch::plus);
  const double e_minus = jc_energy(params, n - 1, Branch::minus);
  auto ret = LineSpectrum::diagonal({{e_minus, 0.5}, {e_plus, 0.5}});
  auto trans = LineSpectrum::offdiagonal({{e_minus, -0.5}, {e_plus, 0.5}});
  return {std::move(ret), std::move(trans)};
}

double dressed_photon_matrix_element(LadderOp op, int k, Branch out,
                                     Branch in) {
  if (k < 1) throw InvalidArgument("dressed matrix elements need k >= 1");
  const double kk = k;
  const double same = out == in ? 1.0 : -1.0;
  if (op == LadderOp::annihilate) {
    return (std::sqrt(kk + 1.0) + same * std::sqrt(kk)) / 2.0;
  }
  return (std::sqrt(kk + 2.0) + same * std::sqrt(kk + 1.0)) / 2.0;
}

double branch_flip_ratio(int k) {
  if (k < 0) throw InvalidArgument("k must be >= 0");
  const double hi = std::sqrt(k + 2.0);
  const double lo = std::sqrt(k + 1.0);
  return (hi - lo) / (hi + lo);
}

}  // namespace cavity::jc
