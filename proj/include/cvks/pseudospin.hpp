#pragma once

#include <Eigen/Dense>

#include <vector>

#include "cvks/peres_mermin.hpp"

namespace cvks::pfock {

using Complex = std::complex<double>;

enum class Axis { X, Y, Z };

/// Parity-pair spin operator on a truncated Fock space of even dimension:
/// 2x2 blocks on (|2n>, |2n+1>):
///   s_x = sum |2n+1><2n| + |2n><2n+1|
///   s_y = i sum |2n><2n+1| - |2n+1><2n|
///   s_z = sum |2n+1><2n+1| - |2n><2n|
Eigen::MatrixXcd pseudo_spin(Axis axis, int dim);

struct FockState {
  int dim_per_mode = 0;
  int modes = 1;
  Eigen::VectorXcd amplitudes;  // length dim (single mode) or dim^2 (two-mode)
  bool renormalized = false;
};

/// Truncated coherent vector e^{-|a|^2/2} a^n / sqrt(n!). Throws when the
/// truncated tail mass exceeds 1e-10.
FockState coherent_fock(Complex alpha, int dim);

/// Tail mass of the truncation, 1 - sum |amp_n|^2, without the precondition.
Eigen::VectorXcd coherent_amplitudes(Complex alpha, int dim);

struct SqueezedSpec {
  double r = 0.5;      // squeezing parameter > 0
  int quad_nodes = 64; // Gauss-Hermite nodes, >= 16; doubled until converged
  int dim = 0;         // even truncation per mode; 0 = derive from the nodes
};

struct XiState {
  FockState state;          // two-mode, renormalized
  double norm_defect;       // |raw quadrature norm^2 - 1| before renormalizing
  int quad_nodes_used;
  int dim_used;
};

/// Continuous Gaussian-weighted superposition of |a/sqrt2, a/sqrt2> built by
/// Gauss-Hermite quadrature and explicitly renormalised. Node count doubles
/// until the state moves by less than 1e-8 in norm distance.
XiState xi_state(const SqueezedSpec& spec);

/// <state|Gamma|state> with each Pauli replaced by the matching pseudo-spin
/// operator; factors applied rightmost-first via the parity-block action.
Complex gamma_expectation_pseudospin(const FockState& state, const pm::GammaProduct& g);

struct PseudoSpinRecord {
  double r;
  double ks;
  double norm_defect;
};

std::vector<PseudoSpinRecord> ks_pseudospin(const std::vector<double>& r_grid,
                                            const SqueezedSpec& base = {});

/// Dense two-mode Gamma product matrix (for the operator-level identity checks
/// and the trace evaluations at small dimension).
Eigen::MatrixXcd gamma_pseudospin_matrix(const pm::GammaProduct& g, int dim_per_mode);

}  // namespace cvks::pfock
