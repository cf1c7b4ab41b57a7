#include "cvks/cstate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

namespace cvks::cstate {

namespace {

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void validate_terms(const std::vector<Term>& terms) {
  if (terms.empty()) throw std::invalid_argument("Superposition: needs at least one term");
  for (const auto& t : terms) {
    if (!finite(t.weight) || !finite(t.ket.a1) || !finite(t.ket.a2))
      throw std::invalid_argument("Superposition: non-finite weight or label");
  }
}

std::int64_t quantize(double x, double tol) {
  return static_cast<std::int64_t>(std::llround(x / tol));
}

}  // namespace

Superposition::Superposition(std::vector<Term> terms) : terms_(std::move(terms)) {
  validate_terms(terms_);
}

Superposition Superposition::single(Complex a1, Complex a2, Complex weight) {
  return Superposition({Term{weight, {a1, a2}}});
}

Complex overlap(Complex a, Complex b) {
  if (!finite(a) || !finite(b)) throw std::invalid_argument("overlap: non-finite label");
  return std::exp(-0.5 * std::norm(a) - 0.5 * std::norm(b) + std::conj(a) * b);
}

Complex inner(const Superposition& bra, const Superposition& ket) {
  Complex sum = 0.0;
  for (const auto& b : bra.terms()) {
    for (const auto& k : ket.terms()) {
      sum += std::conj(b.weight) * k.weight * overlap(b.ket.a1, k.ket.a1) * overlap(b.ket.a2, k.ket.a2);
    }
  }
  return sum;
}

double squared_norm(const Superposition& s) {
  Complex n = inner(s, s);
  double scale = std::max(1.0, std::abs(n));
  if (std::abs(n.imag()) > 1e-12 * scale)
    throw std::runtime_error("squared_norm: imaginary residue above 1e-12");
  return n.real();
}

Superposition normalized(const Superposition& s) {
  double n2 = squared_norm(s);
  if (n2 <= 1e-300)
    throw DegenerateStateError("normalized: state has numerically cancelled (zero norm)");
  double inv = 1.0 / std::sqrt(n2);
  std::vector<Term> out = s.terms();
  for (auto& t : out) t.weight *= inv;
  return Superposition(std::move(out));
}

Superposition pruned(const Superposition& s, double label_tol, double weight_tol) {
  if (label_tol < 0 || weight_tol < 0) throw std::invalid_argument("pruned: tolerances must be >= 0");

  struct Key {
    std::int64_t r1, i1, r2, i2;
    bool operator<(const Key& o) const {
      if (r1 != o.r1) return r1 < o.r1;
      if (i1 != o.i1) return i1 < o.i1;
      if (r2 != o.r2) return r2 < o.r2;
      return i2 < o.i2;
    }
    bool operator==(const Key& o) const { return r1 == o.r1 && i1 == o.i1 && r2 == o.r2 && i2 == o.i2; }
  };

  const double q = label_tol > 0 ? label_tol : 1e-300;
  std::vector<std::pair<Key, Term>> keyed;
  keyed.reserve(s.size());
  for (const auto& t : s.terms()) {
    keyed.push_back({Key{quantize(t.ket.a1.real(), q), quantize(t.ket.a1.imag(), q),
                         quantize(t.ket.a2.real(), q), quantize(t.ket.a2.imag(), q)},
                     t});
  }
  std::stable_sort(keyed.begin(), keyed.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });

  std::vector<Term> out;
  out.reserve(keyed.size());
  for (std::size_t i = 0; i < keyed.size();) {
    Complex w = keyed[i].second.weight;
    std::size_t j = i + 1;
    while (j < keyed.size() && keyed[j].first == keyed[i].first) {
      w += keyed[j].second.weight;
      ++j;
    }
    if (std::abs(w) >= weight_tol) out.push_back(Term{w, keyed[i].second.ket});
    i = j;
  }
  if (out.empty()) {
    // All mass cancelled or fell under the drop tolerance; keep one explicit
    // zero-weight term so the value stays well-formed.
    out.push_back(Term{0.0, s.terms().front().ket});
  }
  return Superposition(std::move(out));
}

DensityEnsemble::DensityEnsemble(std::vector<EnsembleComponent> components)
    : components_(std::move(components)) {
  if (components_.empty()) throw std::invalid_argument("DensityEnsemble: empty");
  double psum = 0.0;
  for (const auto& c : components_) {
    if (!(c.probability >= 0.0 && c.probability <= 1.0))
      throw std::invalid_argument("DensityEnsemble: probability out of [0,1]");
    psum += c.probability;
    double n2 = squared_norm(c.state);
    if (std::abs(n2 - 1.0) > 1e-10)
      throw std::invalid_argument("DensityEnsemble: component state not normalised");
  }
  if (std::abs(psum - 1.0) > 1e-12)
    throw std::invalid_argument("DensityEnsemble: probabilities must sum to 1");
}

}  // namespace cvks::cstate
