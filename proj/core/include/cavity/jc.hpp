#pragma once

// Single cavity with one two-level atom (Jaynes-Cummings model).
//
// Fock states are written |n:j> with n photons and atom in state j
// (0 ground, 1 excited). At resonance the dressed states are
//   |n,+-> = (+-|n:1> + |n+1:0>) / sqrt(2)
// with energies E_{n,+-} = omega0 (n + 1/2) +- 2 g sqrt(n + 1).

#include <array>
#include <span>
#include <utility>

#include "cavity/core.hpp"

namespace cavity::jc {

struct DressedState {
  int n = 0;
  Branch branch = Branch::plus;
  double energy = 0.0;

  // Components on (|n:1>, |n+1:0>) at resonance.
  std::array<double, 2> fock_amplitudes() const;
};

// omega0 (n + 1/2) + branch * sqrt(delta^2 + 4 g^2 (n + 1)).
double jc_energy(const ModelParams& params, int n, Branch branch);

DressedState dressed_state(const ModelParams& params, int n, Branch branch);

// Closed-form Rabi dynamics from |n:0>: return amplitude onto |n:0> and
// transition amplitude onto |n-1:1>. Requires delta == 0 and n >= 1.
std::pair<AmplitudeSeries, AmplitudeSeries> rabi_amplitudes(
    const ModelParams& params, int n, std::span<const double> times);

// Line spectra of the same two quantities: lines at E_{n-1,+-} with
// weights 1/2 (return) and +-1/2 (transition onto |n-1:1>).
std::pair<LineSpectrum, LineSpectrum> jc_line_spectra(const ModelParams& params,
                                                      int n);

enum class LadderOp { annihilate, create };

// Dressed-basis photon matrix elements at resonance, k >= 1:
//   annihilate: <k-1, out| a |k, in> = (sqrt(k+1) +- sqrt(k)) / 2
//   create:                            (sqrt(k+2) +- sqrt(k+1)) / 2
// with "+" for equal branches and "-" for opposite ones. The creation
// values are the non-vanishing elements <k+1, out| a^dag |k, in>; photon
// counting makes <k-1, .| a^dag |k, .> identically zero.
double dressed_photon_matrix_element(LadderOp op, int k, Branch out,
                                     Branch in);

// (sqrt(k+2) - sqrt(k+1)) / (sqrt(k+2) + sqrt(k+1)): relative weight of
// branch-flipping to branch-preserving tunneling.
double branch_flip_ratio(int k);

}  // namespace cavity::jc
