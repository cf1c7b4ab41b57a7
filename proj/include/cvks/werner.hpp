#pragma once

#include <optional>
#include <vector>

#include "cvks/cstate.hpp"
#include "cvks/peres_mermin.hpp"

namespace cvks::werner {

using cstate::Complex;
using cstate::DensityEnsemble;

struct WernerParams {
  double a;      // entanglement weight in [0,1]
  double p;      // purity weight in [0,1]
  double alpha;  // coherent amplitude, real > 0
};

/// p |ECS(a)><ECS(a)| + (1-p)/4 sum over the four product kets |+-a, +-a>.
DensityEnsemble build_werner(const WernerParams& w);

/// Normalised entangled pair sqrt(a)|a,a> + sqrt(1-a)|-a,-a>.
cstate::Superposition ecs_state(double a, double alpha);

/// Analytic ECS normalisation [1 + 2 sqrt(a(1-a)) e^{-4|alpha|^2}]^{-1/2}.
double ecs_normalization(double a, double alpha);

/// Imaginary-residue envelope for the gate realization at finite amplitude:
/// the correlator products are unitary but not Hermitian, so Im<Gamma> is
/// physically of order e^{-2 alpha^2} at small alpha.
pm::ExpectationOptions residue_envelope(double alpha);

/// Six-correlator sum evaluated with the exact gate pipeline.
pm::KsBreakdown werner_ks(const WernerParams& w);

enum class AppendixCase { P1A1, P1A34, P1A12, PHalfAHalf, P0AHalf };

std::optional<AppendixCase> classify_case(double a, double p);

/// Closed-form reference value chi(p,a)(alpha). Transcribed verbatim in
/// appendix_forms.cpp; the (p=1,a=1) expression is rescaled by 1/6 (adopted
/// reading: the printed prefactor is inconsistent with the quantum bound 6
/// and with the other four cases; see tests).
double appendix_oracle(AppendixCase c, double alpha);

/// The (p=1,a=1) expression with its prefactor exactly as printed.
double appendix_a1_as_printed(double alpha);

/// Label-anchored closed-form recursion: each rotation is expanded with the
/// four-term closed form anchored at the ket's own current label, branch
/// chosen by the label's inherited sign. This is the evaluator the bundled
/// closed-form reference curves follow (exactly for the product-ket flows;
/// the entangled cross terms retain an O(e^{-4 alpha^2}) convention gap).
/// It is NOT unitary and is kept for cross-validation only; the production
/// path is werner_ks.
pm::KsBreakdown closed_form_recursion_ks(const WernerParams& w);

struct SweepRecord {
  double alpha;
  pm::KsBreakdown breakdown;
  std::optional<double> oracle;
  std::optional<double> abs_error;
  std::uint64_t seed = 0;
};

/// One record per grid point; oracle columns filled when (a,p) matches one of
/// the five reference cases.
std::vector<SweepRecord> werner_sweep(double a, double p, const std::vector<double>& alpha_grid);

std::vector<double> linspace(double lo, double hi, int count);

}  // namespace cvks::werner
