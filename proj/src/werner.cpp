#include "cvks/werner.hpp"

#include <cmath>

#include "cvks/numerics.hpp"

namespace cvks::werner {

namespace {
void check_params(const WernerParams& w) {
  if (!(w.a >= 0.0 && w.a <= 1.0)) throw std::invalid_argument("werner: a must be in [0,1]");
  if (!(w.p >= 0.0 && w.p <= 1.0)) throw std::invalid_argument("werner: p must be in [0,1]");
  if (!(w.alpha > 0.0) || !std::isfinite(w.alpha))
    throw std::invalid_argument("werner: alpha must be positive and finite");
}
}  // namespace

double ecs_normalization(double a, double alpha) {
  return 1.0 / std::sqrt(1.0 + 2.0 * std::sqrt(a * (1.0 - a)) * std::exp(-4.0 * alpha * alpha));
}

cstate::Superposition ecs_state(double a, double alpha) {
  std::vector<cstate::Term> terms;
  if (a > 0.0) terms.push_back({std::sqrt(a), {alpha, alpha}});
  if (a < 1.0) terms.push_back({std::sqrt(1.0 - a), {-alpha, -alpha}});
  return cstate::normalized(cstate::Superposition(std::move(terms)));
}

DensityEnsemble build_werner(const WernerParams& w) {
  check_params(w);
  std::vector<cstate::EnsembleComponent> comps;
  if (w.p > 0.0) comps.push_back({w.p, ecs_state(w.a, w.alpha)});
  if (w.p < 1.0) {
    const double q = (1.0 - w.p) / 4.0;
    for (int s1 : {1, -1})
      for (int s2 : {1, -1})
        comps.push_back({q, cstate::Superposition::single(s1 * w.alpha, s2 * w.alpha)});
  }
  return DensityEnsemble(std::move(comps));
}

pm::ExpectationOptions residue_envelope(double alpha) {
  pm::ExpectationOptions opts;
  opts.imag_tolerance = 1e-8 + 8.0 * std::exp(-2.0 * alpha * alpha);
  return opts;
}

pm::KsBreakdown werner_ks(const WernerParams& w) {
  check_params(w);
  return pm::ks_function(build_werner(w), pm::Realization::CvGate, w.alpha,
                         residue_envelope(w.alpha));
}

std::optional<AppendixCase> classify_case(double a, double p) {
  auto near = [](double x, double y) { return std::abs(x - y) < 1e-12; };
  if (near(p, 1.0)) {
    if (near(a, 1.0) || near(a, 0.0)) return AppendixCase::P1A1;
    if (near(a, 0.75) || near(a, 0.25)) return AppendixCase::P1A34;
    if (near(a, 0.5)) return AppendixCase::P1A12;
  }
  if (near(p, 0.5) && near(a, 0.5)) return AppendixCase::PHalfAHalf;
  if (near(p, 0.0) && near(a, 0.5)) return AppendixCase::P0AHalf;
  return std::nullopt;
}

std::vector<double> linspace(double lo, double hi, int count) {
  if (count < 1) throw std::invalid_argument("linspace: count must be >= 1");
  std::vector<double> out(count);
  if (count == 1) {
    out[0] = lo;
    return out;
  }
  const double step = (hi - lo) / (count - 1);
  for (int i = 0; i < count; ++i) out[i] = lo + step * i;
  return out;
}

std::vector<SweepRecord> werner_sweep(double a, double p, const std::vector<double>& alpha_grid) {
  for (std::size_t i = 0; i + 1 < alpha_grid.size(); ++i)
    if (!(alpha_grid[i] < alpha_grid[i + 1]))
      throw std::invalid_argument("werner_sweep: grid must be strictly increasing");
  for (double al : alpha_grid)
    if (!(al > 0.0)) throw std::invalid_argument("werner_sweep: grid must be positive");

  const std::optional<AppendixCase> oracle_case = classify_case(a, p);
  std::vector<SweepRecord> records(alpha_grid.size());
  num::parallel_for(alpha_grid.size(), [&](std::size_t i) {
    const double al = alpha_grid[i];
    SweepRecord rec;
    rec.alpha = al;
    rec.breakdown = werner_ks({a, p, al});
    if (oracle_case) {
      rec.oracle = appendix_oracle(*oracle_case, al);
      rec.abs_error = std::abs(rec.breakdown.ks - *rec.oracle);
    }
    records[i] = rec;
  });
  return records;
}

}  // namespace cvks::werner
