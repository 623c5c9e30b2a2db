#pragma once

#include <optional>
#include <span>
#include <vector>

#include "cavity/core.hpp"

namespace cavity::dynamics {

struct Evolution {
  AmplitudeSeries return_amp;
  AmplitudeSeries transition_amp;
};

// Default grid step 0.01 / max(J, |g|, 1).
double default_time_step(const ModelParams& params);
inline constexpr double kDefaultTMax = 50.0;

// Return and transition amplitudes on the uniform grid 0, dt, .., t_max.
// Both spectra must come from the same decomposition (same line count).
Evolution evolve(const LineSpectrum& spec00, const LineSpectrum& specN0,
                 double t_max, double dt);

// Indices i with v[i-1] < v[i] >= v[i+1]; plateaus report their first
// index. Endpoints are never local maxima.
std::vector<std::size_t> local_maxima(std::span<const double> values);

// Earliest grid time where |transition| has a local maximum above
// threshold * (global max). Empty when the series never exceeds 1e-6.
std::optional<double> first_transfer_time(const AmplitudeSeries& transition,
                                          double threshold);

}  // namespace cavity::dynamics
