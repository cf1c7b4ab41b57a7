#include "cvks/rrep.hpp"

#include <cmath>

#include "cvks/numerics.hpp"

namespace cvks::rrep {

namespace {

Eigen::VectorXcd kron_vec(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
  Eigen::VectorXcd out(a.size() * b.size());
  for (int i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

// (1/pi) sum over the polar grid of w |beta><beta|, truncated. Approximates
// the identity as the grid refines.
Eigen::MatrixXcd moment_matrix(int dim, const PolarGridSpec& grid, double support) {
  const double rmax = grid.radial_extent > 0.0 ? grid.radial_extent : 6.0 + support;
  const int nr = grid.radial_nodes, np = grid.angular_nodes;
  if (nr < 8 || np < 8) throw std::invalid_argument("polar grid too coarse");
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  const auto radial = num::gauss_legendre(nr, 0.0, rmax);
  const double dphi = 2.0 * M_PI / np;  // periodic trapezoid
  for (int ir = 0; ir < nr; ++ir) {
    const double r = radial.nodes[ir];
    for (int ip = 0; ip < np; ++ip) {
      const double phi = ip * dphi;
      // the e^{-|b|^2} of the integrand lives inside the coherent vectors
      const Eigen::VectorXcd v = pfock::coherent_amplitudes(std::polar(r, phi), dim);
      m.noalias() += (r * radial.weights[ir] * dphi / M_PI) * (v * v.adjoint());
    }
  }
  return m;
}

}  // namespace

DensityMatrixFock::DensityMatrixFock(int modes, int dim_per_mode, Eigen::MatrixXcd matrix)
    : modes_(modes), dim_(dim_per_mode), m_(std::move(matrix)) {
  if (modes_ != 1 && modes_ != 2) throw std::invalid_argument("DensityMatrixFock: modes must be 1 or 2");
  if (dim_ < 2 || dim_ % 2 != 0)
    throw std::invalid_argument("DensityMatrixFock: dim per mode must be even and >= 2");
  const int expect = modes_ == 1 ? dim_ : dim_ * dim_;
  if (m_.rows() != expect || m_.cols() != expect)
    throw std::invalid_argument("DensityMatrixFock: matrix size does not match dims");
  if ((m_ - m_.adjoint()).cwiseAbs().maxCoeff() > 1e-12)
    throw std::invalid_argument("DensityMatrixFock: not Hermitian within 1e-12");
  if (std::abs(m_.trace().real() - 1.0) > 1e-12 || std::abs(m_.trace().imag()) > 1e-12)
    throw std::invalid_argument("DensityMatrixFock: trace must be 1 within 1e-12");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m_, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -1e-10)
    throw std::invalid_argument("DensityMatrixFock: negative eigenvalue below -1e-10");
}

Complex r_function_single(const DensityMatrixFock& rho, Complex alpha, Complex beta) {
  if (rho.modes() != 1) throw std::invalid_argument("r_function_single: single-mode state required");
  const Eigen::VectorXcd va = pfock::coherent_amplitudes(alpha, rho.dim_per_mode());
  const Eigen::VectorXcd vb = pfock::coherent_amplitudes(beta, rho.dim_per_mode());
  const Complex sand = va.dot(rho.matrix() * vb);
  return sand * std::exp(0.5 * (std::norm(alpha) + std::norm(beta)));
}

Complex r_function_two_mode(const DensityMatrixFock& rho, Complex alpha1, Complex alpha2,
                            Complex beta1, Complex beta2) {
  if (rho.modes() != 2) throw std::invalid_argument("r_function_two_mode: two-mode state required");
  const int d = rho.dim_per_mode();
  const Eigen::VectorXcd va = kron_vec(pfock::coherent_amplitudes(alpha1, d),
                                       pfock::coherent_amplitudes(alpha2, d));
  const Eigen::VectorXcd vb = kron_vec(pfock::coherent_amplitudes(beta1, d),
                                       pfock::coherent_amplitudes(beta2, d));
  const Complex sand = va.dot(rho.matrix() * vb);
  return sand * std::exp(0.5 * (std::norm(alpha1) + std::norm(alpha2) + std::norm(beta1) +
                                std::norm(beta2)));
}

double normalization_integral_single(const DensityMatrixFock& rho, const PolarGridSpec& grid) {
  if (rho.modes() != 1) throw std::invalid_argument("single-mode state required");
  const Eigen::MatrixXcd m = moment_matrix(rho.dim_per_mode(), grid,
                                           std::sqrt(static_cast<double>(rho.dim_per_mode())));
  return (rho.matrix() * m).trace().real();
}

double normalization_integral_two_mode(const DensityMatrixFock& rho, const PolarGridSpec& grid) {
  if (rho.modes() != 2) throw std::invalid_argument("two-mode state required");
  const int d = rho.dim_per_mode();
  const Eigen::MatrixXcd m = moment_matrix(d, grid, std::sqrt(static_cast<double>(d)));
  // Tr(rho (M x M)) without forming the Kronecker product
  Complex total = 0.0;
  const Eigen::MatrixXcd& r = rho.matrix();
  for (int i1 = 0; i1 < d; ++i1)
    for (int j1 = 0; j1 < d; ++j1)
      for (int i2 = 0; i2 < d; ++i2)
        for (int j2 = 0; j2 < d; ++j2)
          total += r(i1 * d + i2, j1 * d + j2) * m(j1, i1) * m(j2, i2);
  return total.real();
}

Eigen::MatrixXcd reconstruct_from_r(const DensityMatrixFock& rho, const PolarGridSpec& grid) {
  if (rho.modes() != 1) throw std::invalid_argument("reconstruct_from_r: single mode only");
  const Eigen::MatrixXcd m = moment_matrix(rho.dim_per_mode(), grid,
                                           std::sqrt(static_cast<double>(rho.dim_per_mode())));
  return m * rho.matrix() * m;
}

double ks_any_state(const DensityMatrixFock& rho) {
  if (rho.modes() != 2) throw std::invalid_argument("ks_any_state: two-mode state required");
  const int d = rho.dim_per_mode();
  auto tr = [&](pm::GammaKind kind, int k) {
    const Eigen::MatrixXcd g = pfock::gamma_pseudospin_matrix(pm::build_gamma(kind, k), d);
    return (rho.matrix() * g).trace().real();
  };
  return tr(pm::GammaKind::Row, 1) + tr(pm::GammaKind::Row, 2) + tr(pm::GammaKind::Row, 3) +
         tr(pm::GammaKind::Column, 1) + tr(pm::GammaKind::Column, 2) - tr(pm::GammaKind::Column, 3);
}

DensityMatrixFock random_density(int dim_per_mode, int rank, std::uint64_t seed) {
  if (dim_per_mode < 2 || dim_per_mode % 2 != 0)
    throw std::invalid_argument("random_density: dim per mode must be even and >= 2");
  const int n = dim_per_mode * dim_per_mode;
  if (rank < 1 || rank > n) throw std::invalid_argument("random_density: rank must be in [1, D^2]");
  num::Rng rng(seed);
  Eigen::MatrixXcd g(n, rank);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < rank; ++j) g(i, j) = Complex(rng.normal(), rng.normal());
  Eigen::MatrixXcd w = g * g.adjoint();
  w /= w.trace().real();
  w = 0.5 * (w + w.adjoint().eval());  // scrub rounding asymmetry
  return DensityMatrixFock(2, dim_per_mode, std::move(w));
}

}  // namespace cvks::rrep
