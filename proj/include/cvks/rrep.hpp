#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <vector>

#include "cvks/pseudospin.hpp"

namespace cvks::rrep {

using Complex = std::complex<double>;

/// Truncated-Fock density operator, one or two modes.
class DensityMatrixFock {
 public:
  DensityMatrixFock(int modes, int dim_per_mode, Eigen::MatrixXcd matrix);

  int modes() const { return modes_; }
  int dim_per_mode() const { return dim_; }
  const Eigen::MatrixXcd& matrix() const { return m_; }

 private:
  int modes_;
  int dim_;
  Eigen::MatrixXcd m_;
};

/// R(a*, b) = <a|rho|b> exp[(|a|^2 + |b|^2)/2], single mode.
Complex r_function_single(const DensityMatrixFock& rho, Complex alpha, Complex beta);

/// Two-mode generalisation with the summed exponential prefactor.
Complex r_function_two_mode(const DensityMatrixFock& rho, Complex alpha1, Complex alpha2,
                            Complex beta1, Complex beta2);

struct PolarGridSpec {
  double radial_extent = 0.0;  // 0 = 6 + max coherent support estimate
  int radial_nodes = 96;
  int angular_nodes = 96;
};

/// pi^{-1} integral of R(b*, b) e^{-|b|^2} d^2b, which must equal 1.
double normalization_integral_single(const DensityMatrixFock& rho, const PolarGridSpec& grid = {});

/// Two-mode normalization integral; evaluated as Tr(rho (M (x) M)) with M the
/// single-mode polar-grid moment matrix, which equals the product-grid sum of
/// the literal integrand by bilinearity.
double normalization_integral_two_mode(const DensityMatrixFock& rho, const PolarGridSpec& grid = {});

/// Grid reconstruction rho -> M rho M from the R kernel (round-trip test aid;
/// ill-conditioned, not a production path).
Eigen::MatrixXcd reconstruct_from_r(const DensityMatrixFock& rho, const PolarGridSpec& grid = {});

/// sum Tr(rho R_k) + Tr(rho C_1) + Tr(rho C_2) - Tr(rho C_3) with pseudo-spin
/// Gamma products. Equals 6 for every valid state at even truncation.
double ks_any_state(const DensityMatrixFock& rho);

/// Seeded Wishart construction G G^dagger / Tr, two-mode, D^2 x D^2.
DensityMatrixFock random_density(int dim_per_mode, int rank, std::uint64_t seed);

}  // namespace cvks::rrep
