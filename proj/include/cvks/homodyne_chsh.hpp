#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "cvks/cstate.hpp"

namespace cvks::chsh {

using cstate::Complex;
using cstate::DensityEnsemble;

struct QuadratureGridSpec {
  double x_max = 0.0;        // 0 = derive from the state labels
  int nodes_per_axis = 512;  // >= 64
  double convergence_tol = 1e-6;
  int max_nodes = 1 << 20;
};

/// Quadrature amplitude <x|alpha> as printed:
///   c_norm (2 pi)^{-1/4} exp(i alpha Im(alpha) - (x/2 - alpha)^2).
/// c_norm = 1 already gives a unit-normalised density (checked in tests).
Complex x_overlap(double x, Complex alpha);

inline constexpr double kXOverlapNorm = 1.0;

/// Sign-binned two-mode homodyne correlator after local rotations
/// O(theta_a, 0) on mode 1 and O(theta_b, 0) on mode 2. The joint sign
/// integral factorises per mode, so the tensor-product quadrature is summed
/// as a product of one-dimensional sign integrals on the same axis grid; the
/// grid is folded about x = 0 so the integrand of each half stays smooth.
/// Node count doubles until the value moves by less than convergence_tol.
double correlation_E(const DensityEnsemble& state, double theta_a, double theta_b,
                     Complex reference_alpha, const QuadratureGridSpec& grid = {});

struct ChshAngles {
  double theta1, theta1p, theta2, theta2p;
};

/// E(t1,t2) + E(t1,t2') + E(t1',t2) - E(t1',t2').
double chsh_value(const DensityEnsemble& state, const ChshAngles& angles, Complex reference_alpha,
                  const QuadratureGridSpec& grid = {});

struct ChshMaximum {
  double best;
  ChshAngles angles;
  int best_restart;
};

/// Multi-start Nelder-Mead over [0, pi]^4 (quadratic penalty outside the box).
/// Deterministic for a fixed seed; restarts run independently and the
/// reduction picks the maximum with ties broken by lowest restart index.
ChshMaximum chsh_maximize(const DensityEnsemble& state, Complex reference_alpha, int restarts,
                          std::uint64_t seed, const QuadratureGridSpec& grid = {});

/// Total integrated probability of the rotated state on the quadrature grid;
/// equals 1 up to quadrature error. Exposed for validation.
double density_norm_check(const DensityEnsemble& state, double theta_a, double theta_b,
                          Complex reference_alpha, const QuadratureGridSpec& grid = {});

}  // namespace cvks::chsh
