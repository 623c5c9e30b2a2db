#include "cavity/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "cavity/dynamics.hpp"
#include "cavity/effective.hpp"
#include "cavity/errors.hpp"

namespace cavity::entanglement {

JointHistogram::JointHistogram(int bins, std::vector<double> mass,
                               std::size_t n_samples)
    : bins_(bins), mass_(std::move(mass)), n_samples_(n_samples) {
  if (bins_ < 2) throw InvalidArgument("histogram needs at least 2 bins");
  if (mass_.size() != static_cast<std::size_t>(bins_) * bins_) {
    throw InvalidArgument("histogram mass has the wrong size");
  }
}

double JointHistogram::total() const {
  return std::accumulate(mass_.begin(), mass_.end(), 0.0);
}

namespace {

int first_bin_at_or_above(double level, int bins) {
  return static_cast<int>(std::ceil(level * bins - 1e-12));
}

}  // namespace

double JointHistogram::mass_off_axes(double level) const {
  const int lo = first_bin_at_or_above(level, bins_);
  double sum = 0.0;
  for (int i = lo; i < bins_; ++i) {
    for (int j = lo; j < bins_; ++j) sum += at(i, j);
  }
  return sum;
}

int JointHistogram::occupied_bins_off_axes(double level) const {
  const int lo = first_bin_at_or_above(level, bins_);
  int count = 0;
  for (int i = lo; i < bins_; ++i) {
    for (int j = lo; j < bins_; ++j) count += at(i, j) > 0.0 ? 1 : 0;
  }
  return count;
}

JointHistogram sample_joint(const AmplitudeSeries& return_amp,
                            const AmplitudeSeries& transition_amp, int bins) {
  if (bins < 2) throw InvalidArgument("histogram needs at least 2 bins");
  if (return_amp.times != transition_amp.times ||
      return_amp.values.size() != transition_amp.values.size()) {
    throw InvalidArgument("return and transition series use different grids");
  }
  const std::size_t n = return_amp.size();
  if (n == 0) throw InvalidArgument("cannot histogram an empty series");

  auto bin_of = [bins](double modulus) {
    const int b = static_cast<int>(modulus * bins);
    return std::clamp(b, 0, bins - 1);
  };

  std::vector<std::size_t> counts(static_cast<std::size_t>(bins) * bins, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const int r = bin_of(std::abs(return_amp.values[i]));
    const int t = bin_of(std::abs(transition_amp.values[i]));
    ++counts[static_cast<std::size_t>(r) * bins + t];
  }
  std::vector<double> mass(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i) {
    mass[i] = static_cast<double>(counts[i]) / static_cast<double>(n);
  }
  return {bins, std::move(mass), n};
}

double noon_score(Complex return_amp, Complex transition_amp) {
  const double s = std::abs(return_amp) + std::abs(transition_amp);
  return 0.5 * s * s;
}

NoonSummary noon_feasibility(const AmplitudeSeries& return_amp,
                             const AmplitudeSeries& transition_amp,
                             double threshold) {
  if (return_amp.times != transition_amp.times || return_amp.size() == 0) {
    throw InvalidArgument("N00N scan needs two series on one non-empty grid");
  }
  NoonSummary out;
  out.max_score = -1.0;
  std::size_t above = 0;
  for (std::size_t i = 0; i < return_amp.size(); ++i) {
    const double s = noon_score(return_amp.values[i], transition_amp.values[i]);
    if (s > out.max_score) {
      out.max_score = s;
      out.argmax_time = return_amp.times[i];
    }
    if (s > threshold) ++above;
  }
  out.fraction_above =
      static_cast<double>(above) / static_cast<double>(return_amp.size());
  return out;
}

NoonSummary noon_feasibility(const ModelParams& params, double t_max, double dt,
                             double threshold) {
  const auto [spec00, specN0] = effective::sector_line_spectra(params);
  const auto evo = dynamics::evolve(spec00, specN0, t_max, dt);
  return noon_feasibility(evo.return_amp, evo.transition_amp, threshold);
}

SamplingWindow default_sampling_window(const ModelParams& params,
                                       const LineSpectrum& spec00) {
  if (!(params.j_tun > 0.0)) {
    throw InvalidArgument("sampling window needs J > 0");
  }
  SamplingWindow w;
  w.t_max = 1000.0 * std::numbers::pi / params.j_tun;
  // The fastest beat in |amplitude| is the widest gap between any two
  // lines, i.e. the spectral span.
  const auto lines = spec00.lines();
  const double span =
      lines.empty() ? 0.0 : lines.back().energy - lines.front().energy;
  w.dt = span > 0.0 ? 2.0 * std::numbers::pi / (20.0 * span)
                    : 0.01 / params.j_tun;
  return w;
}

}  // namespace cavity::entanglement
