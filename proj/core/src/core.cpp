#include "cavity/core.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "cavity/errors.hpp"

namespace cavity {

void ModelParams::validate() const {
  if (n_photons < 1) {
    throw InvalidArgument("n_photons must be >= 1, got " +
                          std::to_string(n_photons));
  }
  if (!(j_tun >= 0.0)) {
    throw InvalidArgument("tunneling rate J must be non-negative");
  }
  if (!std::isfinite(omega0) || !std::isfinite(g) || !std::isfinite(j_tun) ||
      !std::isfinite(delta)) {
    throw InvalidArgument("model parameters must be finite");
  }
}

LineSpectrum::LineSpectrum(std::vector<SpectralLine> lines, SpectrumKind kind)
    : kind_(kind) {
  std::stable_sort(lines.begin(), lines.end(),
                   [](const SpectralLine& a, const SpectralLine& b) {
                     return a.energy < b.energy;
                   });

  lines_.reserve(lines.size());
  std::size_t i = 0;
  while (i < lines.size()) {
    const double anchor = lines[i].energy;
    const double tol = kMergeTolerance * std::max(1.0, std::abs(anchor));
    double energy_sum = 0.0;
    Complex weight_sum{};
    std::size_t count = 0;
    while (i < lines.size() && lines[i].energy - anchor < tol) {
      energy_sum += lines[i].energy;
      weight_sum += lines[i].weight;
      ++count;
      ++i;
    }
    lines_.push_back({energy_sum / static_cast<double>(count), weight_sum});
  }

  if (kind_ == SpectrumKind::diagonal) {
    double total = 0.0;
    for (const auto& line : lines_) {
      if (std::abs(line.weight.imag()) > 1e-12 || line.weight.real() < -1e-14) {
        throw InvalidArgument(
            "diagonal spectrum needs real non-negative weights");
      }
      total += line.weight.real();
    }
    if (std::abs(total - 1.0) > kCompletenessTolerance) {
      throw InvalidArgument("diagonal spectrum weights sum to " +
                            std::to_string(total) + ", expected 1");
    }
  }
}

Complex LineSpectrum::total_weight() const {
  Complex sum{};
  for (const auto& line : lines_) sum += line.weight;
  return sum;
}

std::vector<double> LineSpectrum::energies() const {
  std::vector<double> out;
  out.reserve(lines_.size());
  for (const auto& line : lines_) out.push_back(line.energy);
  return out;
}

std::vector<double> AmplitudeSeries::moduli() const {
  std::vector<double> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(std::abs(v));
  return out;
}

std::vector<double> uniform_time_grid(double t_max, double dt) {
  if (!(dt > 0.0)) throw InvalidArgument("time step must be positive");
  if (!(t_max >= 0.0)) throw InvalidArgument("t_max must be non-negative");
  // Guard against t_max/dt landing a hair below an integer.
  const auto steps = static_cast<std::size_t>(std::floor(t_max / dt + 1e-9));
  std::vector<double> t(steps + 1);
  for (std::size_t i = 0; i <= steps; ++i) t[i] = static_cast<double>(i) * dt;
  return t;
}

std::vector<double> linear_grid(double lo, double hi, std::size_t count) {
  if (count == 0) throw InvalidArgument("grid needs at least one point");
  if (count == 1) return {lo};
  std::vector<double> out(count);
  const double step = (hi - lo) / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) {
    out[i] = lo + step * static_cast<double>(i);
  }
  out.back() = hi;
  return out;
}

std::vector<Complex> smoothed_density(const LineSpectrum& spec,
                                      std::span<const double> energies,
                                      double epsilon) {
  if (!(epsilon > 0.0)) throw InvalidArgument("epsilon must be positive");
  if (energies.empty()) throw InvalidArgument("energy grid is empty");

  std::vector<Complex> out(energies.size());
  for (std::size_t i = 0; i < energies.size(); ++i) {
    Complex acc{};
    for (const auto& line : spec.lines()) {
      const double d = energies[i] - line.energy;
      acc += line.weight * (epsilon / (epsilon * epsilon + d * d));
    }
    out[i] = acc / std::numbers::pi;
  }
  return out;
}

AmplitudeSeries amplitude_from_lines(const LineSpectrum& spec,
                                     std::span<const double> times) {
  AmplitudeSeries series;
  series.times.assign(times.begin(), times.end());
  series.values.resize(times.size());
  for (std::size_t i = 0; i < times.size(); ++i) {
    Complex acc{};
    for (const auto& line : spec.lines()) {
      acc += line.weight * std::polar(1.0, -line.energy * times[i]);
    }
    series.values[i] = acc;
  }
  return series;
}

ResolventSample resolvent_from_lines(const LineSpectrum& spec, Complex z) {
  Complex acc{};
  for (const auto& line : spec.lines()) acc += line.weight / (z - line.energy);
  return {z, acc};
}

}  // namespace cavity
