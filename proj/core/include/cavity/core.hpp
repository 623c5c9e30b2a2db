#pragma once

// Shared domain types: model parameters, pole/residue line spectra,
// resolvent samples and amplitude time series.

#include <complex>
#include <span>
#include <vector>

namespace cavity {

using Complex = std::complex<double>;

// Sign of a Jaynes-Cummings dressed branch |n,+> / |n,->.
enum class Branch : int { minus = -1, plus = +1 };

constexpr double sign_of(Branch b) noexcept { return static_cast<int>(b); }
constexpr Branch flipped(Branch b) noexcept {
  return b == Branch::plus ? Branch::minus : Branch::plus;
}

// Physical configuration, hbar = 1. Energies share one unit (omega0 when
// it is nonzero). `delta` is only read by the single-cavity model.
struct ModelParams {
  int n_photons = 2;
  double omega0 = 0.0;
  double g = 0.0;
  double j_tun = 0.0;
  Branch sigma = Branch::plus;
  double delta = 0.0;

  // Throws InvalidArgument when n_photons < 1 or j_tun < 0.
  void validate() const;
};

struct SpectralLine {
  double energy = 0.0;
  Complex weight{};
};

enum class SpectrumKind { diagonal, offdiagonal };

// Pole/residue data of one resolvent matrix element. Lines are kept
// strictly ascending in energy: eigenvalues closer than
// `kMergeTolerance * max(1, |E|)` are merged and their weights summed.
class LineSpectrum {
 public:
  static constexpr double kMergeTolerance = 1e-9;
  static constexpr double kCompletenessTolerance = 1e-10;

  LineSpectrum() = default;

  // Sorts and merges `lines`. Diagonal spectra must carry real,
  // non-negative weights summing to one; InvalidArgument otherwise.
  LineSpectrum(std::vector<SpectralLine> lines, SpectrumKind kind);

  static LineSpectrum diagonal(std::vector<SpectralLine> lines) {
    return {std::move(lines), SpectrumKind::diagonal};
  }
  static LineSpectrum offdiagonal(std::vector<SpectralLine> lines) {
    return {std::move(lines), SpectrumKind::offdiagonal};
  }

  SpectrumKind kind() const noexcept { return kind_; }
  std::span<const SpectralLine> lines() const noexcept { return lines_; }
  std::size_t size() const noexcept { return lines_.size(); }
  const SpectralLine& operator[](std::size_t i) const { return lines_[i]; }

  Complex total_weight() const;
  std::vector<double> energies() const;

 private:
  std::vector<SpectralLine> lines_;
  SpectrumKind kind_ = SpectrumKind::diagonal;
};

struct ResolventSample {
  Complex z{};
  Complex value{};
};

struct AmplitudeSeries {
  std::vector<double> times;
  std::vector<Complex> values;

  std::size_t size() const noexcept { return times.size(); }
  std::vector<double> moduli() const;
};

// t_i = i * dt for i = 0..floor(t_max / dt). Requires dt > 0, t_max >= 0.
std::vector<double> uniform_time_grid(double t_max, double dt);

// Evenly spaced energies lo..hi inclusive, `count` >= 2 points (or {lo}
// when count == 1).
std::vector<double> linear_grid(double lo, double hi, std::size_t count);

// Lorentzian-broadened density (1/pi) sum_j w_j eps / (eps^2 + (E - E_j)^2)
// on every grid energy. The imaginary part is nonzero only for complex
// off-diagonal weights.
std::vector<Complex> smoothed_density(const LineSpectrum& spec,
                                      std::span<const double> energies,
                                      double epsilon);

// sum_j w_j exp(-i E_j t) at every grid time. Exact finite sum.
AmplitudeSeries amplitude_from_lines(const LineSpectrum& spec,
                                     std::span<const double> times);

// Evaluate sum_j w_j / (z - E_j) directly from the pole/residue data.
ResolventSample resolvent_from_lines(const LineSpectrum& spec, Complex z);

}  // namespace cavity
