#pragma once

#include <Eigen/Dense>

#include <array>
#include <optional>

#include "cvks/cstate.hpp"
#include "cvks/gates.hpp"

namespace cvks::pm {

using cstate::Complex;
using cstate::DensityEnsemble;

inline constexpr double kNchvBound = 4.0;
inline constexpr double kQuantumMax = 6.0;

enum class Pauli { X, Y, Z, I };

struct TwoModeObservable {
  Pauli mode1;
  Pauli mode2;
};

enum class GammaKind { Row, Column };

struct GammaProduct {
  GammaKind kind;
  int index;  // 1..3
  std::array<TwoModeObservable, 3> factors;
};

/// The 3x3 observable square:
///   Z(x)1  1(x)Z  Z(x)Z
///   1(x)X  X(x)1  X(x)X
///   Z(x)X  X(x)Z  Y(x)Y
std::array<std::array<TwoModeObservable, 3>, 3> build_square();

GammaProduct build_gamma(GammaKind kind, int k);

/// Rotation angles realising each Pauli: X -> (0,0), Y -> (0,-pi/2), Z -> (pi,0).
gates::RotationSpec rotation_for(Pauli p, Complex reference_alpha);

enum class Realization { IdealQubit, CvGate };

struct ExpectationOptions {
  // Maximum tolerated |Im <Gamma>| before the evaluation is rejected.
  double imag_tolerance = 1e-8;
};

struct GammaExpectation {
  double value;
  double imag_residue;
};

/// <Gamma> over the ensemble: sum_c p_c Re<psi_c|Gamma|psi_c>, with the factor
/// product applied rightmost-first. Throws if the imaginary residue exceeds
/// options.imag_tolerance.
GammaExpectation gamma_expectation(const DensityEnsemble& state, const GammaProduct& g,
                                   Realization realization, Complex reference_alpha,
                                   const ExpectationOptions& options = {});

struct KsBreakdown {
  double r1, r2, r3, c1, c2, c3;
  double ks;
  double max_imag_residue;
};

/// <R1>+<R2>+<R3>+<C1>+<C2>-<C3>.
KsBreakdown ks_function(const DensityEnsemble& state, Realization realization,
                        Complex reference_alpha, const ExpectationOptions& options = {});

// Abstract-qubit path: arbitrary two-qubit density matrices in the ordered
// basis {|00>, |01>, |10>, |11>} with |0>,|1> the logical pair.
Eigen::Matrix4cd gamma_matrix(const GammaProduct& g);
double ks_ideal(const Eigen::Matrix4cd& rho);

/// Applies the three factors of g (rightmost first) to a pure superposition
/// through the gate engine. Exposed for reuse by the correlator modules.
cstate::Superposition apply_gamma_cv(const GammaProduct& g, const cstate::Superposition& s,
                                     Complex reference_alpha);

}  // namespace cvks::pm
