#include "cavity/dynamics.hpp"

#include <algorithm>
#include <cmath>

#include "cavity/errors.hpp"

namespace cavity::dynamics {

double default_time_step(const ModelParams& params) {
  return 0.01 / std::max({params.j_tun, std::abs(params.g), 1.0});
}

Evolution evolve(const LineSpectrum& spec00, const LineSpectrum& specN0,
                 double t_max, double dt) {
  if (spec00.size() != specN0.size()) {
    throw InvalidArgument("return and transition spectra differ in size");
  }
  if (!(dt > 0.0) || t_max < dt) {
    throw InvalidArgument("evolve needs dt > 0 and t_max >= dt");
  }
  const auto times = uniform_time_grid(t_max, dt);
  return {amplitude_from_lines(spec00, times),
          amplitude_from_lines(specN0, times)};
}

std::vector<std::size_t> local_maxima(std::span<const double> values) {
  std::vector<std::size_t> out;
  const std::size_t n = values.size();
  std::size_t i = 1;
  while (i + 1 < n) {
    if (values[i] > values[i - 1]) {
      // Walk across a plateau and keep its first index if it falls after.
      std::size_t j = i;
      while (j + 1 < n && values[j + 1] == values[i]) ++j;
      if (j + 1 < n && values[j + 1] < values[i]) out.push_back(i);
      i = j + 1;
    } else {
      ++i;
    }
  }
  return out;
}

std::optional<double> first_transfer_time(const AmplitudeSeries& transition,
                                          double threshold) {
  if (transition.size() == 0) {
    throw InvalidArgument("transition series is empty");
  }
  if (!(threshold > 0.0) || threshold > 1.0) {
    throw InvalidArgument("threshold must lie in (0, 1]");
  }
  const auto mod = transition.moduli();
  const double peak = *std::max_element(mod.begin(), mod.end());
  if (peak <= 1e-6) return std::nullopt;

  for (std::size_t i : local_maxima(mod)) {
    if (mod[i] >= threshold * peak) return transition.times[i];
  }
  return std::nullopt;
}

}  // namespace cavity::dynamics
