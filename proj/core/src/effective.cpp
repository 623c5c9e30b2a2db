#include "cavity/effective.hpp"

#include <Eigen/LU>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "cavity/errors.hpp"

namespace cavity::effective {

SectorHamiltonian SectorHamiltonian::window(int first, int count) const {
  if (first < 0 || count < 1 || first + count > dimension()) {
    throw InvalidArgument("sector window out of range");
  }
  SectorHamiltonian out;
  out.n_photons = n_photons;
  out.diag.assign(diag.begin() + first, diag.begin() + first + count);
  out.offdiag.assign(offdiag.begin() + first,
                     offdiag.begin() + first + count - 1);
  return out;
}

double SectorHamiltonian::norm_bound() const {
  double best = 0.0;
  const int n = dimension();
  for (int k = 0; k < n; ++k) {
    double row = std::abs(diag[k]);
    if (k > 0) row += std::abs(offdiag[k - 1]);
    if (k + 1 < n) row += std::abs(offdiag[k]);
    best = std::max(best, row);
  }
  return best;
}

Eigen::MatrixXd SectorHamiltonian::dense() const {
  const int n = dimension();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (int k = 0; k < n; ++k) m(k, k) = diag[k];
  for (int k = 0; k + 1 < n; ++k) {
    m(k, k + 1) = offdiag[k];
    m(k + 1, k) = offdiag[k];
  }
  return m;
}

SectorHamiltonian build_sector_hamiltonian(const ModelParams& params) {
  params.validate();
  const int n = params.n_photons;
  const double coupling = 2.0 * sign_of(params.sigma) * params.g;

  SectorHamiltonian h;
  h.n_photons = n;
  h.diag.resize(n + 1);
  h.offdiag.resize(n);
  for (int k = 0; k <= n; ++k) {
    h.diag[k] = params.omega0 * n +
                coupling * (std::sqrt(static_cast<double>(n - k)) +
                            std::sqrt(static_cast<double>(k)));
  }
  for (int k = 0; k < n; ++k) {
    h.offdiag[k] = -params.j_tun * std::sqrt((k + 1.0) * (n - k));
  }
  return h;
}

namespace {

// tql2 from EISPACK (Bowdler, Martin, Reinsch, Wilkinson). `d` holds the
// diagonal, `e` the off-diagonal with e[n-1] = 0; on return d holds the
// unsorted eigenvalues and z the eigenvectors as columns.
void tql2(std::vector<double>& d, std::vector<double>& e, Eigen::MatrixXd& z,
          long max_iter) {
  const int n = static_cast<int>(d.size());
  const double eps = std::numeric_limits<double>::epsilon();
  long iter = 0;

  double f = 0.0;
  double tst1 = 0.0;
  for (int l = 0; l < n; ++l) {
    tst1 = std::max(tst1, std::abs(d[l]) + std::abs(e[l]));
    int m = l;
    while (m < n - 1 && std::abs(e[m]) > eps * tst1) ++m;

    if (m > l) {
      do {
        if (++iter > max_iter) {
          throw NumericalFailure(
              "tridiagonal QL did not converge for eigenvalue " +
                  std::to_string(l),
              l);
        }
        // Implicit shift from the leading 2x2 block.
        double g = d[l];
        double p = (d[l + 1] - g) / (2.0 * e[l]);
        double r = std::hypot(p, 1.0);
        if (p < 0) r = -r;
        d[l] = e[l] / (p + r);
        d[l + 1] = e[l] * (p + r);
        const double dl1 = d[l + 1];
        double h = g - d[l];
        for (int i = l + 2; i < n; ++i) d[i] -= h;
        f += h;

        p = d[m];
        double c = 1.0, c2 = 1.0, c3 = 1.0;
        const double el1 = e[l + 1];
        double s = 0.0, s2 = 0.0;
        for (int i = m - 1; i >= l; --i) {
          c3 = c2;
          c2 = c;
          s2 = s;
          g = c * e[i];
          h = c * p;
          r = std::hypot(p, e[i]);
          e[i + 1] = s * r;
          s = e[i] / r;
          c = p / r;
          p = c * d[i] - s * g;
          d[i + 1] = h + s * (c * g + s * d[i]);
          for (int k = 0; k < n; ++k) {
            h = z(k, i + 1);
            z(k, i + 1) = s * z(k, i) + c * h;
            z(k, i) = c * z(k, i) - s * h;
          }
        }
        p = -s * s2 * c3 * el1 * e[l] / dl1;
        e[l] = s * p;
        d[l] = c * p;
      } while (std::abs(e[l]) > eps * tst1);
    }
    d[l] += f;
    e[l] = 0.0;
  }
}

}  // namespace

namespace {

bool is_persymmetric(const SectorHamiltonian& h) {
  const int n = h.dimension();
  for (int k = 0; k < n / 2; ++k) {
    if (h.diag[k] != h.diag[n - 1 - k]) return false;
  }
  const int m = n - 1;
  for (int k = 0; k < m / 2; ++k) {
    if (h.offdiag[k] != h.offdiag[m - 1 - k]) return false;
  }
  return true;
}

struct Block {
  std::vector<double> d;
  Eigen::MatrixXd z;
};

Block solve_block(std::vector<double> diag, const std::vector<double>& off,
                  long max_iter) {
  const int n = static_cast<int>(diag.size());
  std::vector<double> e(n, 0.0);
  std::copy(off.begin(), off.end(), e.begin());
  Eigen::MatrixXd z = Eigen::MatrixXd::Identity(n, n);
  tql2(diag, e, z, max_iter);
  return {std::move(diag), std::move(z)};
}

}  // namespace

EigenDecomposition diagonalize(const SectorHamiltonian& h,
                               const DiagonalizeOptions& options) {
  const int n = h.dimension();
  if (n < 1 || static_cast<int>(h.offdiag.size()) != n - 1) {
    throw InvalidArgument("malformed tridiagonal matrix");
  }
  const long max_iter =
      options.max_iterations < 0 ? 100L * (n + 1) : options.max_iterations;

  std::vector<double> d;
  Eigen::MatrixXd z;
  if (n >= 2 && is_persymmetric(h)) {
    // Split into the blocks even and odd under k <-> n-1-k, so that
    // (near-)degenerate doublets still come out with exact parity.
    const int p = n / 2;
    const double r = std::sqrt(0.5);
    std::vector<double> sd(h.diag.begin(), h.diag.begin() + p);
    std::vector<double> so(h.offdiag.begin(), h.offdiag.begin() + (p - 1));
    std::vector<double> ad = sd, ao = so;
    if (n % 2 == 0) {
      sd[p - 1] += h.offdiag[p - 1];
      ad[p - 1] -= h.offdiag[p - 1];
    } else {
      sd.push_back(h.diag[p]);
      so.push_back(std::sqrt(2.0) * h.offdiag[p - 1]);
    }
    const Block even = solve_block(std::move(sd), so, max_iter);
    const Block odd = solve_block(std::move(ad), ao, max_iter);

    d = even.d;
    d.insert(d.end(), odd.d.begin(), odd.d.end());
    z = Eigen::MatrixXd::Zero(n, n);
    const int ne = static_cast<int>(even.d.size());
    for (int j = 0; j < ne; ++j) {
      for (int k = 0; k < p; ++k) {
        z(k, j) = r * even.z(k, j);
        z(n - 1 - k, j) = r * even.z(k, j);
      }
      if (n % 2 == 1) z(p, j) = even.z(p, j);
    }
    for (int j = 0; j < p; ++j) {
      for (int k = 0; k < p; ++k) {
        z(k, ne + j) = r * odd.z(k, j);
        z(n - 1 - k, ne + j) = -r * odd.z(k, j);
      }
    }
  } else {
    Block b = solve_block(h.diag, h.offdiag, max_iter);
    d = std::move(b.d);
    z = std::move(b.z);
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return d[a] < d[b]; });

  EigenDecomposition out;
  out.energies.resize(n);
  out.vectors.resize(n, n);
  for (int j = 0; j < n; ++j) {
    out.energies[j] = d[order[j]];
    out.vectors.col(j) = z.col(order[j]);
    for (int k = 0; k < n; ++k) {
      const double v = out.vectors(k, j);
      if (std::abs(v) > 1e-12) {
        if (v < 0) out.vectors.col(j) *= -1.0;
        break;
      }
    }
  }
  return out;
}

std::pair<LineSpectrum, LineSpectrum> spectra_from_eigen(
    const EigenDecomposition& decomp) {
  const int n = decomp.dimension();
  std::vector<SpectralLine> diag, off;
  diag.reserve(n);
  off.reserve(n);
  for (int j = 0; j < n; ++j) {
    const double v0 = decomp.vectors(0, j);
    const double vn = decomp.vectors(n - 1, j);
    diag.push_back({decomp.energies[j], v0 * v0});
    off.push_back({decomp.energies[j], vn * v0});
  }
  return {LineSpectrum::diagonal(std::move(diag)),
          LineSpectrum::offdiagonal(std::move(off))};
}

std::pair<LineSpectrum, LineSpectrum> sector_line_spectra(
    const ModelParams& params) {
  return spectra_from_eigen(diagonalize(build_sector_hamiltonian(params)));
}

Complex resolvent_element(const EigenDecomposition& decomp, int row, int col,
                          Complex z) {
  Complex acc{};
  for (int j = 0; j < decomp.dimension(); ++j) {
    acc += decomp.vectors(row, j) * decomp.vectors(col, j) /
           (z - decomp.energies[j]);
  }
  return acc;
}

Eigen::VectorXcd resolvent_column(const SectorHamiltonian& h, int col,
                                  Complex z) {
  const int n = h.dimension();
  if (col < 0 || col >= n) throw InvalidArgument("column out of range");
  Eigen::MatrixXcd m = -h.dense().cast<Complex>();
  m.diagonal().array() += z;
  Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(n);
  rhs(col) = 1.0;
  return m.partialPivLu().solve(rhs);
}

}  // namespace cavity::effective
