#include "cvks/gates.hpp"

#include <cmath>

namespace cvks::gates {

namespace {

constexpr Complex kI{0.0, 1.0};

void check_mode(int mode) {
  if (mode != 1 && mode != 2) throw std::invalid_argument("mode must be 1 or 2");
}

Complex& label_of(cstate::Term& t, int mode) { return mode == 1 ? t.ket.a1 : t.ket.a2; }

}  // namespace

Superposition displaced(Complex beta, const Superposition& s, int mode) {
  check_mode(mode);
  std::vector<cstate::Term> out = s.terms();
  for (auto& t : out) {
    Complex& g = label_of(t, mode);
    t.weight *= std::exp(0.5 * (beta * std::conj(g) - std::conj(beta) * g));
    g += beta;
  }
  return Superposition(std::move(out));
}

Superposition kerred(const Superposition& s, int mode) {
  check_mode(mode);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  const Complex keep = std::polar(inv_sqrt2, -M_PI / 4.0);
  const Complex flip = std::polar(inv_sqrt2, M_PI / 4.0);
  std::vector<cstate::Term> out;
  out.reserve(2 * s.size());
  for (const auto& t : s.terms()) {
    cstate::Term kept = t;
    kept.weight *= keep;
    cstate::Term flipped = t;
    flipped.weight *= flip;
    label_of(flipped, mode) = -label_of(flipped, mode);
    out.push_back(kept);
    out.push_back(flipped);
  }
  return Superposition(std::move(out));
}

GateSequence compile_rotation(const RotationSpec& r) {
  if (r.reference_alpha == Complex(0.0, 0.0))
    throw std::invalid_argument("compile_rotation: reference amplitude must be nonzero");
  const Complex a4 = 4.0 * r.reference_alpha;
  return GateSequence{
      {Gate::Kind::Displace, kI * r.phi / a4},
      {Gate::Kind::Kerr, 0.0},
      {Gate::Kind::Displace, kI * r.theta / a4},
      {Gate::Kind::Kerr, 0.0},
      {Gate::Kind::Displace, -kI * r.phi / a4},
  };
}

Superposition apply_gate(const Gate& g, const Superposition& s, int mode) {
  return g.kind == Gate::Kind::Displace ? displaced(g.beta, s, mode) : kerred(s, mode);
}

Superposition apply_rotation(const RotationSpec& r, const Superposition& s, int mode) {
  Superposition out = s;
  for (const Gate& g : compile_rotation(r)) {
    out = apply_gate(g, out, mode);
  }
  return cstate::pruned(out, cstate::kLabelMergeTol, cstate::kWeightDropTol);
}

Mat2 ideal_rotation(double theta, double phi) {
  const double st = std::sin(theta / 2.0);
  const double ct = std::cos(theta / 2.0);
  const Complex ep = std::exp(kI * phi);
  return Mat2{{{Complex(st), ep * ct}, {std::conj(ep) * ct, Complex(-st)}}};
}

std::array<cstate::Term, 4> rotation_closed_form(double theta, double phi, Complex alpha, int sign) {
  if (alpha == Complex(0.0, 0.0))
    throw std::invalid_argument("rotation_closed_form: reference amplitude must be nonzero");
  if (sign != 1 && sign != -1) throw std::invalid_argument("rotation_closed_form: sign must be +-1");
  const Complex t4 = kI * theta / (4.0 * alpha);
  const Complex f2 = kI * phi / (2.0 * alpha);
  const Complex ep = std::exp(kI * theta / 4.0);
  const Complex em = std::exp(-kI * theta / 4.0);
  const Complex a = alpha;
  std::array<cstate::Term, 4> out;
  if (sign > 0) {
    const Complex ef = std::exp(kI * phi / 2.0);
    out[0] = {0.5 * ep, {a + t4, 0.0}};
    out[1] = {0.5 * kI * ep * ef, {-a - f2 - t4, 0.0}};
    out[2] = {0.5 * kI * em * ef, {-a - f2 + t4, 0.0}};
    out[3] = {-0.5 * em, {a - t4, 0.0}};
  } else {
    const Complex ef = std::exp(-kI * phi / 2.0);
    out[0] = {-0.5 * ep, {-a - t4, 0.0}};
    out[1] = {0.5 * kI * ep * ef, {a - f2 + t4, 0.0}};
    out[2] = {0.5 * kI * em * ef, {a - f2 - t4, 0.0}};
    out[3] = {0.5 * em, {-a + t4, 0.0}};
  }
  return out;
}

double rotation_fidelity_vs_ideal(const RotationSpec& r) {
  if (std::abs(r.reference_alpha) <= 0.0)
    throw std::invalid_argument("rotation_fidelity_vs_ideal: |reference_alpha| must be positive");
  const Complex a = r.reference_alpha;
  const Mat2 m = ideal_rotation(r.theta, r.phi);
  double worst = 1.0;
  for (int col = 0; col < 2; ++col) {
    const Complex in_label = col == 0 ? a : -a;
    Superposition out = apply_rotation(r, Superposition::single(in_label, 0.0), 1);
    // Ideal image in the non-orthogonal pair basis, normalised.
    std::vector<cstate::Term> ideal_terms{
        {m[0][col], {a, 0.0}},
        {m[1][col], {-a, 0.0}},
    };
    Superposition ideal = normalized(Superposition(std::move(ideal_terms)));
    double f = std::norm(inner(ideal, out));
    worst = std::min(worst, f);
  }
  return worst;
}

}  // namespace cvks::gates
