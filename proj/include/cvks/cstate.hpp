#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

namespace cvks::cstate {

using Complex = std::complex<double>;

class DegenerateStateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two-mode coherent ket |a1, a2>.
struct TwoModeKet {
  Complex a1;
  Complex a2;
};

struct Term {
  Complex weight;
  TwoModeKet ket;
};

/// Finite weighted superposition of two-mode coherent kets. Immutable after
/// construction; all operations return new values.
class Superposition {
 public:
  explicit Superposition(std::vector<Term> terms);
  static Superposition single(Complex a1, Complex a2, Complex weight = 1.0);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

 private:
  std::vector<Term> terms_;
};

/// Single-mode overlap <a|b> = exp(-|a|^2/2 - |b|^2/2 + conj(a) b).
Complex overlap(Complex a, Complex b);

/// Sesquilinear inner product, bra side conjugated.
Complex inner(const Superposition& bra, const Superposition& ket);

/// Real squared norm; throws if the imaginary residue exceeds 1e-12 relative.
double squared_norm(const Superposition& s);

/// Unit-normalised copy. Throws DegenerateStateError when the state has
/// numerically cancelled (squared norm <= 1e-300).
Superposition normalized(const Superposition& s);

/// Merges terms whose labels coincide within label_tol (per component) and
/// drops terms with |weight| < weight_tol. Deterministic output ordering.
Superposition pruned(const Superposition& s, double label_tol, double weight_tol);
inline Superposition pruned(const Superposition& s, double tol) { return pruned(s, tol, tol); }

// Engine-internal pruning defaults: merge exact-duplicate labels produced by
// gate algebra without touching physically distinct ones.
inline constexpr double kLabelMergeTol = 1e-12;
inline constexpr double kWeightDropTol = 1e-14;

struct EnsembleComponent {
  double probability;
  Superposition state;
};

/// Statistical mixture of normalised pure superpositions.
class DensityEnsemble {
 public:
  explicit DensityEnsemble(std::vector<EnsembleComponent> components);
  const std::vector<EnsembleComponent>& components() const { return components_; }

 private:
  std::vector<EnsembleComponent> components_;
};

}  // namespace cvks::cstate
