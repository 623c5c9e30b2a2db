#pragma once

// Time-sampled joint statistics of (|c0|, |cN|) = (|return|, |transition|)
// and scoring of overlap with the N00N state (|N,0> + |0,N>)/sqrt(2).

#include <vector>

#include "cavity/core.hpp"

namespace cavity::entanglement {

// B x B normalized histogram over [0,1]^2. Row index bins |c0|, column
// index bins |cN|; values of exactly 1 land in the last bin.
class JointHistogram {
 public:
  JointHistogram(int bins, std::vector<double> mass, std::size_t n_samples);

  int bins() const noexcept { return bins_; }
  double bin_width() const noexcept { return 1.0 / bins_; }
  std::size_t n_samples() const noexcept { return n_samples_; }
  double at(int i_return, int i_transition) const {
    return mass_[static_cast<std::size_t>(i_return) * bins_ + i_transition];
  }
  const std::vector<double>& mass() const noexcept { return mass_; }

  double total() const;
  // Mass in bins whose lower edges both lie at or above `level`.
  double mass_off_axes(double level) const;
  int occupied_bins_off_axes(double level) const;

 private:
  int bins_;
  std::vector<double> mass_;
  std::size_t n_samples_;
};

inline constexpr int kDefaultBins = 50;

JointHistogram sample_joint(const AmplitudeSeries& return_amp,
                            const AmplitudeSeries& transition_amp, int bins);

// Best overlap-squared with a N00N state over the relative phase:
// (|c0| + |cN|)^2 / 2.
double noon_score(Complex return_amp, Complex transition_amp);

struct NoonSummary {
  double max_score = 0.0;
  double argmax_time = 0.0;
  double fraction_above = 0.0;
};

NoonSummary noon_feasibility(const AmplitudeSeries& return_amp,
                             const AmplitudeSeries& transition_amp,
                             double threshold);

// Evolves |N,0> under the effective two-cavity model (harmonic when
// g = 0) and summarizes the N00N score over 0..t_max.
NoonSummary noon_feasibility(const ModelParams& params, double t_max, double dt,
                             double threshold);

// Sampling window 1000 pi / J, with a step that resolves the largest
// level spacing (the spectral span of `spec00`) at least 20 times per
// period.
struct SamplingWindow {
  double t_max = 0.0;
  double dt = 0.0;
};
SamplingWindow default_sampling_window(const ModelParams& params,
                                       const LineSpectrum& spec00);

}  // namespace cavity::entanglement
