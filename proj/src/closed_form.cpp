// Label-anchored recursion behind the closed-form reference curves.
//
// Each rotation is expanded with the four-term closed form of the gate
// pipeline, but anchored at the ket's own current label rather than the fixed
// apparatus amplitude, with the branch (which of the two closed-form rows
// applies) inherited from the label's sign ancestry. Chaining rotations this
// way makes displacement sizes divide by already-shifted labels, which is what
// produces the rational-in-alpha structure of the reference expressions. The
// map is linear but not unitary, so it stays out of the production path.

#include "cvks/werner.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

namespace cvks::werner {

namespace {

using cstate::Complex;

constexpr Complex kI{0.0, 1.0};

struct BitTerm {
  Complex weight;
  Complex z1, z2;
  int b1, b2;  // +-1 branch bits per mode
};

void rotate_terms(std::vector<BitTerm>& terms, double theta, double phi, int mode) {
  const Complex ep = std::exp(kI * theta / 4.0);
  const Complex em = std::exp(-kI * theta / 4.0);
  const Complex efp = std::exp(kI * phi / 2.0);
  const Complex efm = std::exp(-kI * phi / 2.0);
  std::vector<BitTerm> out;
  out.reserve(4 * terms.size());
  for (const BitTerm& t : terms) {
    const Complex g = mode == 1 ? t.z1 : t.z2;
    const int bit = mode == 1 ? t.b1 : t.b2;
    const Complex anchor = bit > 0 ? g : -g;
    const Complex t4 = kI * theta / (4.0 * anchor);
    const Complex f2 = kI * phi / (2.0 * anchor);
    struct Quad {
      Complex c, label;
      int bit;
    };
    std::array<Quad, 4> quads;
    if (bit > 0) {
      quads = {Quad{0.5 * ep, anchor + t4, +1},
               Quad{0.5 * kI * ep * efp, -anchor - f2 - t4, -1},
               Quad{0.5 * kI * em * efp, -anchor - f2 + t4, -1},
               Quad{-0.5 * em, anchor - t4, +1}};
    } else {
      quads = {Quad{-0.5 * ep, -anchor - t4, -1},
               Quad{0.5 * kI * ep * efm, anchor - f2 + t4, +1},
               Quad{0.5 * kI * em * efm, anchor - f2 - t4, +1},
               Quad{0.5 * em, -anchor + t4, -1}};
    }
    for (const Quad& q : quads) {
      BitTerm nt = t;
      // -i: constant phase relating the printed rows to the exact pipeline.
      nt.weight = -kI * t.weight * q.c;
      if (mode == 1) {
        nt.z1 = q.label;
        nt.b1 = q.bit;
      } else {
        nt.z2 = q.label;
        nt.b2 = q.bit;
      }
      out.push_back(nt);
    }
  }

  // merge exact duplicates (same labels and bits)
  auto key = [](const BitTerm& t) {
    auto q = [](double x) { return static_cast<std::int64_t>(std::llround(x * 1e10)); };
    return std::array<std::int64_t, 6>{q(t.z1.real()), q(t.z1.imag()), q(t.z2.real()),
                                       q(t.z2.imag()), t.b1, t.b2};
  };
  std::stable_sort(out.begin(), out.end(),
                   [&](const BitTerm& a, const BitTerm& b) { return key(a) < key(b); });
  std::vector<BitTerm> merged;
  merged.reserve(out.size());
  for (std::size_t i = 0; i < out.size();) {
    BitTerm acc = out[i];
    std::size_t j = i + 1;
    while (j < out.size() && key(out[j]) == key(out[i])) {
      acc.weight += out[j].weight;
      ++j;
    }
    if (std::abs(acc.weight) > 1e-15) merged.push_back(acc);
    i = j;
  }
  terms = std::move(merged);
}

const std::array<std::array<pm::Pauli, 2>, 3>& factor_paulis(const pm::GammaProduct& g,
                                                             std::array<std::array<pm::Pauli, 2>, 3>& buf) {
  for (int f = 0; f < 3; ++f) buf[f] = {g.factors[f].mode1, g.factors[f].mode2};
  return buf;
}

void apply_pauli(std::vector<BitTerm>& terms, pm::Pauli p, int mode) {
  switch (p) {
    case pm::Pauli::X: rotate_terms(terms, 0.0, 0.0, mode); break;
    case pm::Pauli::Y: rotate_terms(terms, 0.0, -M_PI / 2.0, mode); break;
    case pm::Pauli::Z: rotate_terms(terms, M_PI, 0.0, mode); break;
    case pm::Pauli::I: break;
  }
}

Complex bra_ket(const std::vector<BitTerm>& bra, const std::vector<BitTerm>& ket) {
  Complex s = 0.0;
  for (const BitTerm& b : bra)
    for (const BitTerm& k : ket)
      s += std::conj(b.weight) * k.weight * cstate::overlap(b.z1, k.z1) * cstate::overlap(b.z2, k.z2);
  return s;
}

Complex gamma_value(const std::vector<BitTerm>& state, const pm::GammaProduct& g) {
  std::vector<BitTerm> ket = state;
  std::array<std::array<pm::Pauli, 2>, 3> buf;
  const auto& factors = factor_paulis(g, buf);
  for (int f = 2; f >= 0; --f) {
    apply_pauli(ket, factors[f][0], 1);
    apply_pauli(ket, factors[f][1], 2);
  }
  return bra_ket(state, ket);
}

}  // namespace

pm::KsBreakdown closed_form_recursion_ks(const WernerParams& w) {
  if (!(w.alpha > 0.0)) throw std::invalid_argument("closed_form_recursion_ks: alpha must be > 0");
  std::vector<std::pair<double, std::vector<BitTerm>>> comps;
  if (w.p > 0.0) {
    const double n = ecs_normalization(w.a, w.alpha);
    std::vector<BitTerm> ecs;
    if (w.a > 0.0) ecs.push_back({n * std::sqrt(w.a), w.alpha, w.alpha, +1, +1});
    if (w.a < 1.0) ecs.push_back({n * std::sqrt(1.0 - w.a), -w.alpha, -w.alpha, -1, -1});
    comps.push_back({w.p, std::move(ecs)});
  }
  if (w.p < 1.0) {
    for (int s1 : {1, -1})
      for (int s2 : {1, -1})
        comps.push_back({(1.0 - w.p) / 4.0,
                         {BitTerm{1.0, s1 * w.alpha, s2 * w.alpha, s1, s2}}});
  }

  auto expect = [&](pm::GammaKind kind, int k) {
    Complex tot = 0.0;
    const pm::GammaProduct g = pm::build_gamma(kind, k);
    for (const auto& [prob, st] : comps) tot += prob * gamma_value(st, g);
    return tot;
  };

  Complex r1 = expect(pm::GammaKind::Row, 1), r2 = expect(pm::GammaKind::Row, 2),
          r3 = expect(pm::GammaKind::Row, 3);
  Complex c1 = expect(pm::GammaKind::Column, 1), c2 = expect(pm::GammaKind::Column, 2),
          c3 = expect(pm::GammaKind::Column, 3);
  pm::KsBreakdown out{r1.real(), r2.real(), r3.real(), c1.real(), c2.real(), c3.real(), 0.0, 0.0};
  out.ks = out.r1 + out.r2 + out.r3 + out.c1 + out.c2 - out.c3;
  for (const Complex& v : {r1, r2, r3, c1, c2, c3})
    out.max_imag_residue = std::max(out.max_imag_residue, std::abs(v.imag()));
  return out;
}

}  // namespace cvks::werner
