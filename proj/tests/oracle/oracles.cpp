#include "oracle/oracles.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <unsupported/Eigen/MatrixFunctions>
#include <utility>

namespace cavity::oracle {

namespace {

using Ket = std::pair<int, int>;  // (n1, n2)

// a_mode |ket> = sqrt(n) |n-1>; returns coefficient 0 for n = 0.
std::pair<double, Ket> lower(int mode, Ket k) {
  int& n = mode == 1 ? k.first : k.second;
  if (n == 0) return {0.0, k};
  const double c = std::sqrt(static_cast<double>(n));
  --n;
  return {c, k};
}

std::pair<double, Ket> raise(int mode, Ket k) {
  int& n = mode == 1 ? k.first : k.second;
  ++n;
  return {std::sqrt(static_cast<double>(n)), k};
}

}  // namespace

Eigen::MatrixXd fock_sector_hamiltonian(const ModelParams& p) {
  const int n = p.n_photons;
  std::map<Ket, int> index;
  for (int k = 0; k <= n; ++k) index[{n - k, k}] = k;

  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n + 1, n + 1);
  const double s = p.sigma == Branch::plus ? 1.0 : -1.0;
  for (const auto& [ket, col] : index) {
    // Hopping: a1^dag a2 and a2^dag a1.
    for (auto [from, to] : {std::pair{2, 1}, std::pair{1, 2}}) {
      auto [c1, k1] = lower(from, ket);
      if (c1 == 0.0) continue;
      auto [c2, k2] = raise(to, k1);
      h(index.at(k2), col) += -p.j_tun * c1 * c2;
    }
    // Number operators and the sqrt(n) interaction.
    const double n1 = ket.first, n2 = ket.second;
    h(col, col) += p.omega0 * (n1 + n2) +
                   2.0 * s * p.g * (std::sqrt(n1) + std::sqrt(n2));
  }
  return h;
}

Eigen::MatrixXcd dense_resolvent(const Eigen::MatrixXd& m, Complex z) {
  const auto n = m.rows();
  Eigen::MatrixXcd a = z * Eigen::MatrixXcd::Identity(n, n) - m.cast<Complex>();
  return a.fullPivLu().inverse();
}

DenseEigen dense_eigen(const Eigen::MatrixXd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
  return {es.eigenvalues(), es.eigenvectors()};
}

Eigen::VectorXcd propagate_expm(const Eigen::MatrixXd& m,
                                const Eigen::VectorXcd& psi0, double t) {
  const Eigen::MatrixXcd gen = Complex(0.0, -t) * m.cast<Complex>();
  const Eigen::MatrixXcd u = gen.exp();
  return u * psi0;
}

Eigen::VectorXcd propagate_eigen(const DenseEigen& eig,
                                 const Eigen::VectorXcd& psi0, double t) {
  const Eigen::MatrixXcd v = eig.vectors.cast<Complex>();
  Eigen::VectorXcd coeff = v.adjoint() * psi0;
  for (Eigen::Index j = 0; j < coeff.size(); ++j) {
    coeff(j) *= std::polar(1.0, -eig.values(j) * t);
  }
  return v * coeff;
}

double lorentzian_sum(const std::vector<double>& energies,
                      const std::vector<double>& weights, double e, double eps) {
  double acc = 0.0;
  for (std::size_t j = 0; j < energies.size(); ++j) {
    const double d = e - energies[j];
    acc += weights[j] * eps / (eps * eps + d * d);
  }
  return acc / std::numbers::pi;
}

Eigen::Matrix2d jc_block(const ModelParams& p, int n) {
  const double c = p.omega0 * (n + 0.5);
  const double off = 2.0 * p.g * std::sqrt(n + 1.0);
  Eigen::Matrix2d m;
  m << c + p.delta, off, off, c - p.delta;
  return m;
}

double dressed_element(bool create, int bra_n, int bra_branch, int ket_n,
                       int ket_branch) {
  const int cap = std::max(bra_n, ket_n) + 4;
  // index 2m + j for |m:j>
  auto dressed = [cap](int n, int branch) {
    Eigen::VectorXd v = Eigen::VectorXd::Zero(2 * (cap + 1));
    v(2 * n + 1) = branch / std::sqrt(2.0);
    v(2 * (n + 1)) = 1.0 / std::sqrt(2.0);
    return v;
  };
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(2 * (cap + 1), 2 * (cap + 1));
  for (int m = 1; m <= cap; ++m) {
    for (int j = 0; j < 2; ++j) a(2 * (m - 1) + j, 2 * m + j) = std::sqrt(m);
  }
  const Eigen::MatrixXd op = create ? Eigen::MatrixXd(a.transpose()) : a;
  return dressed(bra_n, bra_branch).dot(op * dressed(ket_n, ket_branch));
}

double trapezoid(const std::vector<double>& x, const std::vector<double>& y) {
  double s = 0.0;
  for (std::size_t i = 1; i < x.size(); ++i) {
    s += 0.5 * (x[i] - x[i - 1]) * (y[i] + y[i - 1]);
  }
  return s;
}

}  // namespace cavity::oracle
