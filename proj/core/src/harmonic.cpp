#include "cavity/harmonic.hpp"

#include <cmath>
#include <vector>

#include "cavity/errors.hpp"

namespace cavity::harmonic {

namespace {

void require_even(const ModelParams& params) {
  params.validate();
  if (params.n_photons % 2 != 0) {
    throw UnsupportedConfiguration(
        "coupled harmonic cavities are only modelled for even N");
  }
}

// 2^{-N} C(N,k) for k = 0..N, built by the multiplicative recurrence so no
// intermediate binomial overflows.
std::vector<double> binomial_weights(int n) {
  std::vector<double> w(static_cast<std::size_t>(n) + 1);
  w[0] = std::ldexp(1.0, -n);
  for (int k = 1; k <= n; ++k) {
    w[k] = w[k - 1] * static_cast<double>(n - k + 1) / static_cast<double>(k);
  }
  return w;
}

}  // namespace

double harmonic_overlap(int n, int k) {
  if (n < 0) throw InvalidArgument("photon number must be >= 0");
  if (k < 0 || k > n) {
    throw InvalidArgument("overlap index k must lie in 0..N");
  }
  return std::sqrt(binomial_weights(n)[k]);
}

std::pair<LineSpectrum, LineSpectrum> harmonic_line_spectra(
    const ModelParams& params) {
  require_even(params);
  const int n = params.n_photons;
  const auto w = binomial_weights(n);

  std::vector<SpectralLine> diag, off;
  diag.reserve(w.size());
  off.reserve(w.size());
  for (int k = 0; k <= n; ++k) {
    const double e = params.omega0 * n - params.j_tun * (2.0 * k - n);
    diag.push_back({e, w[k]});
    off.push_back({e, k % 2 == 0 ? w[k] : -w[k]});
  }
  return {LineSpectrum::diagonal(std::move(diag)),
          LineSpectrum::offdiagonal(std::move(off))};
}

std::pair<AmplitudeSeries, AmplitudeSeries> harmonic_amplitudes(
    const ModelParams& params, std::span<const double> times) {
  require_even(params);
  const int n = params.n_photons;
  // (-i)^N for even N is (-1)^{N/2}.
  const double transition_sign = (n / 2) % 2 == 0 ? 1.0 : -1.0;

  AmplitudeSeries ret, trans;
  ret.times.assign(times.begin(), times.end());
  trans.times = ret.times;
  ret.values.reserve(times.size());
  trans.values.reserve(times.size());
  for (double t : times) {
    const Complex phase = std::polar(1.0, -params.omega0 * n * t);
    const double jt = params.j_tun * t;
    ret.values.push_back(phase * std::pow(std::cos(jt), n));
    trans.values.push_back(phase * transition_sign * std::pow(std::sin(jt), n));
  }
  return {std::move(ret), std::move(trans)};
}

}  // namespace cavity::harmonic
