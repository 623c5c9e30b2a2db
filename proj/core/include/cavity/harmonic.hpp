#pragma once

// Two tunnel-coupled harmonic cavities, initial Fock state |N,0>.
// Everything here is closed form; N must be even for the line spectra
// and amplitudes.

#include <span>
#include <utility>

#include "cavity/core.hpp"

namespace cavity::harmonic {

// <N,0|N-k;k> = 2^{-N/2} C(N,k)^{1/2}.
double harmonic_overlap(int n, int k);

// rho00: lines at omega0 N - J (2k - N) with weights 2^{-N} C(N,k).
// rhoN0: same energies, weights 2^{-N} C(N,k) (-1)^k.
std::pair<LineSpectrum, LineSpectrum> harmonic_line_spectra(
    const ModelParams& params);

// return     = e^{-i omega0 N t} cos^N(J t)
// transition = e^{-i omega0 N t} (-i)^N sin^N(J t)
std::pair<AmplitudeSeries, AmplitudeSeries> harmonic_amplitudes(
    const ModelParams& params, std::span<const double> times);

}  // namespace cavity::harmonic
