#pragma once

#include <array>
#include <vector>

#include "cvks/cstate.hpp"

namespace cvks::gates {

using cstate::Complex;
using cstate::Superposition;

/// Effective qubit rotation O(theta, phi) on the {|a>, |-a>} manifold,
/// together with the reference amplitude that fixes the displacement sizes.
struct RotationSpec {
  double theta;
  double phi;
  Complex reference_alpha;
};

struct Gate {
  enum class Kind { Displace, Kerr };
  Kind kind;
  Complex beta;  // displacement argument; unused for Kerr
};

using GateSequence = std::vector<Gate>;

/// D(beta)|g> = exp((beta conj(g) - conj(beta) g)/2) |g + beta>, term by term.
Superposition displaced(Complex beta, const Superposition& s, int mode);

/// exp[-i pi n^2 / 2]: |g> -> e^{-i pi/4}/sqrt2 |g> + e^{i pi/4}/sqrt2 |-g>.
Superposition kerred(const Superposition& s, int mode);

/// Five-gate decomposition, first-applied gate first:
///   D(i phi/4a), Kerr, D(i theta/4a), Kerr, D(-i phi/4a).
GateSequence compile_rotation(const RotationSpec& r);

Superposition apply_gate(const Gate& g, const Superposition& s, int mode);

/// Applies compile_rotation(r) in order, pruning exact-duplicate labels.
Superposition apply_rotation(const RotationSpec& r, const Superposition& s, int mode);

using Mat2 = std::array<std::array<Complex, 2>, 2>;

/// [[sin(t/2), e^{i p} cos(t/2)], [e^{-i p} cos(t/2), -sin(t/2)]].
Mat2 ideal_rotation(double theta, double phi);

/// Worst-case squared overlap, over inputs |+-a>, between the gate pipeline
/// image and the ideal rotation image expressed in the coherent pair basis.
double rotation_fidelity_vs_ideal(const RotationSpec& r);

/// Printed four-term closed form for the rotation acting on |sign * a>
/// (sign = +1 or -1, a = reference amplitude). Returned as weight/label pairs.
/// The exact pipeline reproduces these terms times a fixed global factor -i;
/// see the gate tests.
std::array<cstate::Term, 4> rotation_closed_form(double theta, double phi, Complex alpha, int sign);

}  // namespace cvks::gates
