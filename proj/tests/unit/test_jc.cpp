#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>

#include "cavity/errors.hpp"
#include "cavity/jc.hpp"
#include "oracle/oracles.hpp"

namespace cavity::jc {
namespace {

constexpr double kPi = std::numbers::pi;

ModelParams jc_params(double omega0, double g, double delta = 0.0) {
  ModelParams p;
  p.omega0 = omega0;
  p.g = g;
  p.delta = delta;
  return p;
}

TEST(JcEnergy, GroundDoubletAtUnitCoupling) {
  EXPECT_DOUBLE_EQ(jc_energy(jc_params(1.0, 1.0), 0, Branch::plus), 2.5);
  EXPECT_DOUBLE_EQ(jc_energy(jc_params(1.0, 1.0), 0, Branch::minus), -1.5);
}

TEST(JcEnergy, DecoupledLimitIsDegenerate) {
  const auto p = jc_params(1.3, 0.0);
  for (int n = 0; n < 20; ++n) {
    EXPECT_DOUBLE_EQ(jc_energy(p, n, Branch::plus), 1.3 * (n + 0.5));
    EXPECT_DOUBLE_EQ(jc_energy(p, n, Branch::minus), 1.3 * (n + 0.5));
  }
}

TEST(JcEnergy, DetunedBlockMatchesTwoByTwoDiagonalization) {
  const auto p = jc_params(1.0, 2.0, 3.0);
  EXPECT_NEAR(jc_energy(p, 2, Branch::plus), 2.5 + std::sqrt(57.0), 1e-12);
  EXPECT_NEAR(jc_energy(p, 2, Branch::minus), 2.5 - std::sqrt(57.0), 1e-12);

  for (int n = 0; n < 10; ++n) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(oracle::jc_block(p, n));
    EXPECT_NEAR(jc_energy(p, n, Branch::minus), es.eigenvalues()(0), 1e-12);
    EXPECT_NEAR(jc_energy(p, n, Branch::plus), es.eigenvalues()(1), 1e-12);
  }
}

TEST(JcEnergy, BranchSymmetry) {
  const auto p = jc_params(0.7, 1.1, 0.4);
  for (int n = 0; n < 30; ++n) {
    EXPECT_NEAR(jc_energy(p, n, Branch::plus) + jc_energy(p, n, Branch::minus),
                2 * 0.7 * (n + 0.5), 1e-12);
  }
}

TEST(JcEnergy, NegativeIndexThrows) {
  EXPECT_THROW(jc_energy(jc_params(1.0, 1.0), -1, Branch::plus),
               InvalidArgument);
}

TEST(DressedState, AmplitudesAreEigenvectorsOfTheBlock) {
  const auto p = jc_params(1.0, 1.2);
  for (int n = 0; n < 8; ++n) {
    for (Branch b : {Branch::plus, Branch::minus}) {
      const auto s = dressed_state(p, n, b);
      const auto amp = s.fock_amplitudes();
      Eigen::Vector2d v(amp[0], amp[1]);
      EXPECT_NEAR(v.norm(), 1.0, 1e-15);
      const Eigen::Vector2d r = oracle::jc_block(p, n) * v - s.energy * v;
      EXPECT_LT(r.norm(), 1e-12);
    }
  }
}

TEST(RabiAmplitudes, InitialCondition) {
  const std::vector<double> t{0.0};
  const auto [ret, trans] = rabi_amplitudes(jc_params(1.0, 1.2), 3, t);
  EXPECT_NEAR(std::abs(ret.values[0] - 1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(trans.values[0]), 0.0, 1e-15);
}

TEST(RabiAmplitudes, HalfPeriodTransfersCompletely) {
  const double g = 0.9;
  const int n = 5;
  const std::vector<double> t{kPi / 2 / (2 * g * std::sqrt(n))};
  const auto [ret, trans] = rabi_amplitudes(jc_params(1.0, g), n, t);
  EXPECT_NEAR(std::abs(ret.values[0]), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(trans.values[0]), 1.0, 1e-14);
}

TEST(RabiAmplitudes, MatchesTwoStatePropagation) {
  const auto p = jc_params(1.0, 1.2);
  const int n = 4;
  // {|n:0>, |n-1:1>} is the block with photon index n-1, basis order
  // (|n-1:1>, |n:0>).
  const auto block = oracle::jc_block(p, n - 1);
  const Eigen::MatrixXd m = block;
  Eigen::VectorXcd psi0(2);
  psi0 << 0.0, 1.0;
  const auto times = uniform_time_grid(5.0, 0.05);
  const auto [ret, trans] = rabi_amplitudes(p, n, times);
  for (std::size_t i = 0; i < times.size(); ++i) {
    const auto psi = oracle::propagate_expm(m, psi0, times[i]);
    EXPECT_NEAR(std::abs(ret.values[i] - psi(1)), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(trans.values[i] - psi(0)), 0.0, 1e-12);
  }
  const std::vector<double> t03{0.3};
  const double r = std::abs(rabi_amplitudes(p, n, t03).first.values[0]);
  EXPECT_NEAR(r * r, std::pow(std::cos(2 * 1.2 * 2 * 0.3), 2), 1e-14);
}

TEST(RabiAmplitudes, ProbabilityConservation) {
  const auto p = jc_params(1.0, 1.2);
  const auto t = uniform_time_grid(10.0, 0.001);
  for (int n : {1, 2, 7, 30}) {
    const auto [ret, trans] = rabi_amplitudes(p, n, t);
    for (std::size_t i = 0; i < t.size(); ++i) {
      EXPECT_NEAR(std::norm(ret.values[i]) + std::norm(trans.values[i]), 1.0,
                  1e-12);
    }
  }
}

TEST(RabiAmplitudes, LineSpectraSynthesizeTheSameSeries) {
  const auto p = jc_params(0.6, 0.8);
  const auto t = uniform_time_grid(8.0, 0.02);
  for (int n : {1, 3, 9}) {
    const auto [ret, trans] = rabi_amplitudes(p, n, t);
    const auto [s_ret, s_trans] = jc_line_spectra(p, n);
    const auto a = amplitude_from_lines(s_ret, t);
    const auto b = amplitude_from_lines(s_trans, t);
    for (std::size_t i = 0; i < t.size(); ++i) {
      EXPECT_NEAR(std::abs(a.values[i] - ret.values[i]), 0.0, 1e-12);
      EXPECT_NEAR(std::abs(b.values[i] - trans.values[i]), 0.0, 1e-12);
    }
  }
}

TEST(RabiAmplitudes, Errors) {
  const std::vector<double> t{0.0};
  EXPECT_THROW(rabi_amplitudes(jc_params(1.0, 1.0, 0.2), 2, t),
               UnsupportedConfiguration);
  EXPECT_THROW(rabi_amplitudes(jc_params(1.0, 1.0), 0, t), InvalidArgument);
}

TEST(MatrixElements, PrintedValue) {
  EXPECT_NEAR(dressed_photon_matrix_element(LadderOp::annihilate, 1,
                                            Branch::plus, Branch::plus),
              (std::sqrt(2.0) + 1.0) / 2, 1e-15);
  EXPECT_NEAR(dressed_photon_matrix_element(LadderOp::annihilate, 1,
                                            Branch::plus, Branch::plus),
              1.2071, 1e-4);
}

TEST(MatrixElements, BranchFlipSuppressedAtLargeK) {
  double prev = 1.0;
  for (int k : {1, 10, 100, 1000, 100000}) {
    const double flip = dressed_photon_matrix_element(LadderOp::annihilate, k,
                                                      Branch::plus, Branch::minus);
    const double keep = dressed_photon_matrix_element(LadderOp::annihilate, k,
                                                      Branch::plus, Branch::plus);
    const double ratio = std::abs(flip / keep);
    EXPECT_LT(ratio, prev);
    prev = ratio;
    EXPECT_NEAR(branch_flip_ratio(k),
                (std::sqrt(k + 2.0) - std::sqrt(k + 1.0)) /
                    (std::sqrt(k + 2.0) + std::sqrt(k + 1.0)),
                1e-15);
  }
  EXPECT_LT(prev, 1e-5);
}

TEST(MatrixElements, MatchBruteForceDressedStates) {
  for (int k = 1; k <= 50; ++k) {
    for (Branch out : {Branch::plus, Branch::minus}) {
      for (Branch in : {Branch::plus, Branch::minus}) {
        const int so = static_cast<int>(out), si = static_cast<int>(in);
        EXPECT_NEAR(
            dressed_photon_matrix_element(LadderOp::annihilate, k, out, in),
            oracle::dressed_element(false, k - 1, so, k, si), 1e-12)
            << "k=" << k;
        EXPECT_NEAR(dressed_photon_matrix_element(LadderOp::create, k, out, in),
                    oracle::dressed_element(true, k + 1, so, k, si), 1e-12)
            << "k=" << k;
        EXPECT_EQ(oracle::dressed_element(true, k - 1, so, k, si), 0.0);
      }
    }
  }
}

TEST(MatrixElements, ZeroIndexThrows) {
  EXPECT_THROW(dressed_photon_matrix_element(LadderOp::create, 0, Branch::plus,
                                             Branch::plus),
               InvalidArgument);
}

}  // namespace
}  // namespace cavity::jc
