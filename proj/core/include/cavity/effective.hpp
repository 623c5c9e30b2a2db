#pragma once

// Effective two-cavity Hamiltonian with a sqrt(n) photon-photon
// interaction, restricted to the N-photon sector and diagonalized exactly.
//
//   H = -J (a1^dag a2 + a2^dag a1) + omega0 (n1 + n2)
//       + 2 sigma g (sqrt(n1) + sqrt(n2))
//
// Basis index k labels |N-k, k> (k photons in the second cavity).

#include <Eigen/Core>
#include <utility>
#include <vector>

#include "cavity/core.hpp"

namespace cavity::effective {

struct SectorHamiltonian {
  int n_photons = 0;
  std::vector<double> diag;     // d_k, k = 0..N
  std::vector<double> offdiag;  // h_k couples k and k+1, k = 0..N-1

  int dimension() const noexcept { return static_cast<int>(diag.size()); }

  // Photon numbers (first cavity, second cavity) of basis state k.
  std::pair<int, int> basis_label(int k) const { return {n_photons - k, k}; }

  // Principal submatrix on basis indices first..first+count-1.
  SectorHamiltonian window(int first, int count) const;

  // Max absolute row sum; an upper bound on the spectral norm.
  double norm_bound() const;

  Eigen::MatrixXd dense() const;
};

struct EigenDecomposition {
  std::vector<double> energies;  // ascending
  Eigen::MatrixXd vectors;       // column j is |E_j> in the |N-k,k> basis

  int dimension() const noexcept { return static_cast<int>(energies.size()); }
};

SectorHamiltonian build_sector_hamiltonian(const ModelParams& params);

struct DiagonalizeOptions {
  // Total QL sweeps allowed; negative selects the default 100 (n + 1).
  long max_iterations = -1;
};

// Implicit-shift QL iteration for the symmetric tridiagonal matrix. A
// matrix symmetric under k <-> n-1-k (every sector Hamiltonian) is first
// split into its even and odd blocks, so eigenvectors carry exact parity
// even for nearly degenerate doublets. Eigenvalues ascending, each eigenvector's first component above 1e-12
// in magnitude made positive. Throws NumericalFailure (carrying the
// eigenvalue index) once the iteration cap is exceeded.
EigenDecomposition diagonalize(const SectorHamiltonian& h,
                               const DiagonalizeOptions& options = {});

// rho00 weights v_{0j}^2 and rhoN0 weights v_{Nj} v_{0j}, i.e. the
// spectra of <N,0|(z-H)^{-1}|N,0> and <0,N|(z-H)^{-1}|N,0>.
std::pair<LineSpectrum, LineSpectrum> spectra_from_eigen(
    const EigenDecomposition& decomp);

// build + diagonalize + spectra_from_eigen.
std::pair<LineSpectrum, LineSpectrum> sector_line_spectra(
    const ModelParams& params);

// <row|(z-H)^{-1}|col> from the spectral representation. Elements that
// are small compared to the diagonal ones lose relative accuracy through
// cancellation; use resolvent_column when those matter.
Complex resolvent_element(const EigenDecomposition& decomp, int row, int col,
                          Complex z);

// (z-H)^{-1}|col> by a pivoted LU solve of the dense matrix.
Eigen::VectorXcd resolvent_column(const SectorHamiltonian& h, int col,
                                  Complex z);

}  // namespace cavity::effective
