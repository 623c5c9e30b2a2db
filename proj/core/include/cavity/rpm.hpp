#pragma once

// Recursive projection method for two coupled Jaynes-Cummings cavities in
// the effective sqrt(n) model, N even.
//
// The sector splits into mirror pairs P_k = {|N/2+k, N/2-k>, |N/2-k, N/2+k>},
// k = 0..N/2, each with diagonal energy
//   f_k = omega0 N + 2 sigma g (sqrt(N/2+k) + sqrt(N/2-k)),
// and P_k couples to P_{k+1} with amplitude -J sqrt((N/2+k+1)(N/2-k)) on
// both members. Exchange symmetry keeps the projected resolvent on P_k of
// the form [[a_k, b_k], [b_k, a_k]]. Starting from the balanced centre
// (P_0 is the single state |N/2, N/2>, so a_0 = b_0 = 1/(z - f_0)),
//   D_k = z - f_{k+1} - J^2 c_k a_k,   B_k = J^2 c_k b_k,
//   c_k = (N/2+k+1)(N/2-k),
//   a_{k+1} = D_k / (D_k^2 - B_k^2),   b_{k+1} = B_k / (D_k^2 - B_k^2),
// and after N/2 steps a = <N,0|(z-H)^{-1}|N,0>, b = <0,N|(z-H)^{-1}|N,0>.

#include <span>
#include <vector>

#include "cavity/core.hpp"

namespace cavity::rpm {

// Projected resolvent on mirror pair `k` at energy `z`.
struct RpmState {
  int k = 0;
  Complex a{};
  Complex b{};
  Complex z{};
};

// `shifted_mutant` is deliberately wrong ((N/2+k)(N/2-k+1)); it exists so
// the validation suite can demonstrate that it localizes indexing faults.
enum class HoppingIndexing { printed, shifted_mutant };

struct RpmOptions {
  HoppingIndexing indexing = HoppingIndexing::printed;
  // |D^2 - B^2| below this aborts with NearPoleError.
  double pole_guard = 1e-300;
};

struct ResolventPair {
  Complex a{};  // <N,0|(z-H)^{-1}|N,0>
  Complex b{};  // <0,N|(z-H)^{-1}|N,0>
};

// f_k for pair k.
double pair_energy(const ModelParams& params, int k);

// Squared-hopping factor c_k linking pair k to k+1 (without J^2).
double hopping_factor(int n_photons, int k,
                      HoppingIndexing indexing = HoppingIndexing::printed);

// All intermediate states k = 0..N/2. Requires even N and Im z != 0.
std::vector<RpmState> rpm_trace(const ModelParams& params, Complex z,
                                const RpmOptions& options = {});

ResolventPair rpm_resolvent(const ModelParams& params, Complex z,
                            const RpmOptions& options = {});

struct RpmSpectra {
  std::vector<double> rho00;
  std::vector<double> rhoN0;
};

// (1/pi) Im of a and b at z = E - i epsilon for every grid energy.
RpmSpectra rpm_spectra(const ModelParams& params,
                       std::span<const double> energies, double epsilon);

struct SignSymmetryReport {
  ResolventPair original;
  ResolventPair mirrored;  // at z' = 2 omega0 N - z with g -> -g
  double max_deviation = 0.0;  // max(|a + a'|, |b + b'|) / |a|
  bool passed = false;
};

// a(2 omega0 N - z, -g) = -a(z, g) and the same for b; for omega0 = 0 this
// is the plain (z, g, a, b) -> -(z, g, a, b) invariance.
SignSymmetryReport check_sign_symmetry(const ModelParams& params, Complex z,
                                       double tolerance = 1e-12);

}  // namespace cavity::rpm
