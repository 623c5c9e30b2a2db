#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "cavity/effective.hpp"
#include "cavity/errors.hpp"
#include "cavity/harmonic.hpp"
#include "oracle/oracles.hpp"

namespace cavity::effective {
namespace {

TEST(SectorHamiltonian, SinglePhotonPureTunneling) {
  const auto h = build_sector_hamiltonian(
      {.n_photons = 1, .omega0 = 0.0, .g = 0.0, .j_tun = 0.6});
  Eigen::Matrix2d expect;
  expect << 0.0, -0.6, -0.6, 0.0;
  EXPECT_EQ(h.dense(), Eigen::MatrixXd(expect));
}

TEST(SectorHamiltonian, TwoPhotonDiagonalAtZeroTunneling) {
  const auto h = build_sector_hamiltonian(
      {.n_photons = 2, .omega0 = 0.0, .g = 1.0, .j_tun = 0.0});
  ASSERT_EQ(h.dimension(), 3);
  EXPECT_NEAR(h.diag[0], 2 * std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(h.diag[0], 2.8284, 1e-4);
  EXPECT_DOUBLE_EQ(h.diag[1], 4.0);
  EXPECT_DOUBLE_EQ(h.diag[2], h.diag[0]);
  EXPECT_EQ(h.offdiag, (std::vector<double>{0.0, 0.0}));
}

TEST(SectorHamiltonian, MatchesFockOperatorConstruction) {
  for (int n = 1; n <= 8; ++n) {
    for (Branch s : {Branch::plus, Branch::minus}) {
      const ModelParams p{.n_photons = n, .omega0 = 0.9, .g = 1.2, .j_tun = 0.8,
                          .sigma = s};
      const Eigen::MatrixXd diff =
          build_sector_hamiltonian(p).dense() - oracle::fock_sector_hamiltonian(p);
      EXPECT_LT(diff.cwiseAbs().maxCoeff(), 1e-13) << "N=" << n;
    }
  }
}

TEST(SectorHamiltonian, BasisLabelAndWindow) {
  const auto h = build_sector_hamiltonian(
      {.n_photons = 6, .omega0 = 1.0, .g = 0.5, .j_tun = 0.4});
  EXPECT_EQ(h.basis_label(2), (std::pair{4, 2}));
  const auto w = h.window(2, 3);
  EXPECT_EQ(w.dimension(), 3);
  EXPECT_EQ(w.dense(), Eigen::MatrixXd(h.dense().block(2, 2, 3, 3)));
  const auto eig = oracle::dense_eigen(h.dense());
  EXPECT_GE(h.norm_bound(), eig.values.cwiseAbs().maxCoeff());
}

TEST(Diagonalize, TwoByTwoTunneling) {
  const auto d = diagonalize(build_sector_hamiltonian(
      {.n_photons = 1, .omega0 = 0.0, .g = 0.0, .j_tun = 0.6}));
  ASSERT_EQ(d.dimension(), 2);
  EXPECT_NEAR(d.energies[0], -0.6, 1e-15);
  EXPECT_NEAR(d.energies[1], 0.6, 1e-15);
  const double r = 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(d.vectors(0, 0), r, 1e-15);
  EXPECT_NEAR(d.vectors(1, 0), r, 1e-15);
  EXPECT_NEAR(d.vectors(0, 1), r, 1e-15);
  EXPECT_NEAR(d.vectors(1, 1), -r, 1e-15);
}

TEST(Diagonalize, ZeroTunnelingReturnsSortedDiagonal) {
  const auto h = build_sector_hamiltonian(
      {.n_photons = 9, .omega0 = 1.0, .g = 1.2, .j_tun = 0.0});
  const auto d = diagonalize(h);
  auto sorted = h.diag;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < 10; ++i) EXPECT_NEAR(d.energies[i], sorted[i], 1e-13);
  // (k, N-k) pairs coincide: five doubly degenerate levels.
  for (int i = 0; i < 10; i += 2) {
    EXPECT_NEAR(d.energies[i], d.energies[i + 1], 1e-13);
  }
}

TEST(Diagonalize, SimilarityTransformIsDiagonal) {
  const auto h = build_sector_hamiltonian(
      {.n_photons = 12, .omega0= 0.37, .g = 0.91, .j_tun = 0.53,
       .sigma = Branch::minus});
  const auto d = diagonalize(h);
  const Eigen::MatrixXd m = h.dense();
  const Eigen::MatrixXd t = d.vectors.transpose() * m * d.vectors;
  const Eigen::MatrixXd off =
      t - Eigen::MatrixXd(t.diagonal().asDiagonal());
  EXPECT_LT(off.cwiseAbs().maxCoeff(), 1e-9);
  const Eigen::MatrixXd gram = d.vectors.transpose() * d.vectors;
  EXPECT_LT((gram - Eigen::MatrixXd::Identity(13, 13)).cwiseAbs().maxCoeff(),
            1e-10);
  for (int j = 0; j < 13; ++j) {
    EXPECT_LT((m * d.vectors.col(j) - d.energies[j] * d.vectors.col(j)).norm(),
              1e-9 * h.norm_bound());
  }
}

TEST(Diagonalize, AgreesWithDenseSolverAtLargeN) {
  const ModelParams p{.n_photons = 100, .omega0 = 1.0, .g = 1.2, .j_tun = 0.8};
  const auto d = diagonalize(build_sector_hamiltonian(p));
  const auto ref = oracle::dense_eigen(oracle::fock_sector_hamiltonian(p));
  for (int i = 0; i <= 100; ++i) {
    EXPECT_NEAR(d.energies[i], ref.values(i), 1e-10);
    EXPECT_NEAR(std::abs(d.vectors.col(i).dot(ref.vectors.col(i))), 1.0, 1e-9);
  }
}

TEST(Diagonalize, SignConvention) {
  const auto d = diagonalize(build_sector_hamiltonian(
      {.n_photons = 10, .omega0 = 0.0, .g = 0.7, .j_tun = 0.5}));
  for (int j = 0; j < d.dimension(); ++j) {
    int first = 0;
    while (std::abs(d.vectors(first, j)) <= 1e-12) ++first;
    EXPECT_GT(d.vectors(first, j), 0.0);
  }
}

TEST(Diagonalize, IterationCapRaisesNumericalFailure) {
  const auto h = build_sector_hamiltonian(
      {.n_photons = 6, .omega0 = 1.0, .g = 1.2, .j_tun = 0.8});
  try {
    diagonalize(h, {.max_iterations = 0});
    FAIL() << "expected NumericalFailure";
  } catch (const NumericalFailure& e) {
    EXPECT_GE(e.index(), 0);
    EXPECT_LE(e.index(), 6);
  }
}

TEST(SpectraFromEigen, HarmonicLimit) {
  for (int n = 2; n <= 16; n += 2) {
    const ModelParams p{.n_photons = n, .omega0 = 1.0, .g = 0.0, .j_tun = 0.8};
    const auto [a00, aN0] = sector_line_spectra(p);
    const auto [h00, hN0] = harmonic::harmonic_line_spectra(p);
    ASSERT_EQ(a00.size(), h00.size());
    for (std::size_t i = 0; i < a00.size(); ++i) {
      EXPECT_NEAR(a00[i].energy, h00[i].energy, 1e-12);
      EXPECT_NEAR(a00[i].weight.real(), h00[i].weight.real(), 1e-12);
      EXPECT_NEAR(aN0[i].weight.real(), hN0[i].weight.real(), 1e-12);
    }
  }
}

TEST(SpectraFromEigen, ZeroTunnelingSingleLine) {
  const ModelParams p{.n_photons = 8, .omega0 = 1.0, .g = 1.2, .j_tun = 0.0};
  const auto [rho00, rhoN0] = sector_line_spectra(p);
  const auto h = build_sector_hamiltonian(p);
  double total = 0.0;
  int carrying = 0;
  for (const auto& l : rho00.lines()) {
    total += l.weight.real();
    if (l.weight.real() > 1e-12) {
      ++carrying;
      EXPECT_NEAR(l.energy, h.diag[0], 1e-12);
      EXPECT_NEAR(l.weight.real(), 1.0, 1e-12);
    }
  }
  EXPECT_EQ(carrying, 1);
  EXPECT_NEAR(total, 1.0, 1e-12);
}

TEST(SpectraFromEigen, ParityGivesPlusMinusRho00) {
  const ModelParams p{.n_photons = 14, .omega0 = 1.0, .g = 1.2, .j_tun = 0.8};
  const auto d = diagonalize(build_sector_hamiltonian(p));
  for (int j = 0; j < d.dimension(); ++j) {
    const Eigen::VectorXd v = d.vectors.col(j);
    const Eigen::VectorXd r = v.reverse();
    EXPECT_LT(std::min((v - r).norm(), (v + r).norm()), 1e-10);
  }
  const auto [rho00, rhoN0] = spectra_from_eigen(d);
  for (std::size_t i = 0; i < rho00.size(); ++i) {
    EXPECT_NEAR(std::abs(rhoN0[i].weight.real()), rho00[i].weight.real(),
                1e-12);
  }
}

TEST(SpectraFromEigen, DegeneracyLiftedAtFigureParameters) {
  const ModelParams p{.n_photons = 100, .omega0 = 1.0, .g = 1.2, .j_tun = 0.8};
  const auto [rho00, rhoN0] = sector_line_spectra(p);
  EXPECT_EQ(rho00.size(), 101u);
  EXPECT_NEAR(rho00.total_weight().real(), 1.0, 1e-10);
}

TEST(SpectraFromEigen, ZeroTunnelingDegeneracyPattern) {
  for (int n : {10, 100}) {
    for (Branch s : {Branch::plus, Branch::minus}) {
      const ModelParams p{.n_photons = n, .omega0 = 1.0, .g = 1.2,
                          .j_tun = 0.0, .sigma = s};
      const auto d = diagonalize(build_sector_hamiltonian(p));
      std::vector<double> expect;
      for (int k = 0; k <= n; ++k) {
        expect.push_back(n + 2 * sign_of(s) * 1.2 *
                                 (std::sqrt(n - k) + std::sqrt(double(k))));
      }
      std::sort(expect.begin(), expect.end());
      for (int i = 0; i <= n; ++i) EXPECT_NEAR(d.energies[i], expect[i], 1e-9);
    }
  }
}

TEST(Resolvent, ElementAndColumnAgreeWithDenseInverse) {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> re(-5.0, 25.0), im(0.05, 2.0);
  const ModelParams p{.n_photons = 10, .omega0 = 1.0, .g = 0.5, .j_tun = 0.4,
                      .sigma = Branch::minus};
  const auto h = build_sector_hamiltonian(p);
  const auto d = diagonalize(h);
  for (int trial = 0; trial < 20; ++trial) {
    const Complex z(re(rng), -im(rng));
    const auto inv = oracle::dense_resolvent(oracle::fock_sector_hamiltonian(p), z);
    const auto col = resolvent_column(h, 0, z);
    for (int r = 0; r <= 10; ++r) {
      EXPECT_LT(std::abs(col(r) - inv(r, 0)), 1e-12 * std::abs(inv(0, 0)) + 1e-15);
      EXPECT_LT(std::abs(resolvent_element(d, r, 0, z) - inv(r, 0)), 1e-10);
    }
  }
}

}  // namespace
}  // namespace cavity::effective
