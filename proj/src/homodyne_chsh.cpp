#include "cvks/homodyne_chsh.hpp"

#include <algorithm>
#include <cmath>

#include "cvks/gates.hpp"
#include "cvks/numerics.hpp"

namespace cvks::chsh {

namespace {

constexpr Complex kI{0.0, 1.0};

int find_or_add(std::vector<Complex>& labels, Complex z) {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (std::abs(labels[i] - z) < 1e-13) return static_cast<int>(i);
  labels.push_back(z);
  return static_cast<int>(labels.size() - 1);
}

// Joint rotated terms of one mixture component for one (theta_a, theta_b)
// pair, with labels replaced by indices into per-(mode, angle) label unions.
struct JointTerms {
  std::vector<Complex> weights;
  std::vector<int> idx1, idx2;
};

// One-dimensional pair integrals for every (label, label) pair of one mode
// under one rotation angle. sign = integral of sign(x) g(x,a) conj(g(x,b));
// full = the same without the sign factor. Folded about x = 0 so each half is
// smooth; the folded sign integrand vanishes at x = 0.
struct PairTable {
  int count = 0;
  std::vector<Complex> sign, full;
  Complex at(int ia, int ib, bool binned) const {
    return binned ? sign[ia * count + ib] : full[ia * count + ib];
  }
};

// g(x, a) on the half grid x = k h via the stable recurrence
//   g(k h) = pref e^{i a Im a - a^2} * e^{a h k} * e^{-(k h)^2 / 4},
// whose running magnitude never exceeds 1 once combined.
void fill_half(std::vector<Complex>& out, Complex a, double h, int n,
               const std::vector<double>& gauss, bool negative_axis) {
  const double pref = kXOverlapNorm * std::pow(2.0 * M_PI, -0.25);
  const Complex c0 = pref * std::exp(kI * a * a.imag() - a * a);
  const Complex step = std::exp((negative_axis ? -a : a) * h);
  Complex r = 1.0;
  for (int k = 0; k < n; ++k) {
    out[k] = c0 * r * gauss[k];
    r *= step;
  }
}

PairTable build_table(const std::vector<Complex>& labels, double x_max, int n) {
  const int m = static_cast<int>(labels.size());
  const double h = x_max / (n - 1);
  std::vector<double> gauss(n);
  for (int k = 0; k < n; ++k) {
    const double x = k * h;
    gauss[k] = std::exp(-0.25 * x * x);
  }
  std::vector<std::vector<Complex>> gp(m, std::vector<Complex>(n));
  std::vector<std::vector<Complex>> gm(m, std::vector<Complex>(n));
  for (int i = 0; i < m; ++i) {
    fill_half(gp[i], labels[i], h, n, gauss, false);
    fill_half(gm[i], labels[i], h, n, gauss, true);
  }
  PairTable t;
  t.count = m;
  t.sign.assign(m * m, 0.0);
  t.full.assign(m * m, 0.0);
  for (int ia = 0; ia < m; ++ia) {
    for (int ib = 0; ib < m; ++ib) {
      // Two half-line trapezoids; their h/2 endpoint weights at x = 0 add up
      // to the correct interior weight h of the full line.
      Complex s = 0.0, f = 0.0;
      for (int k = 0; k < n; ++k) {
        const double w = (k == 0 || k == n - 1) ? 0.5 * h : h;
        const Complex vp = gp[ia][k] * std::conj(gp[ib][k]);
        const Complex vm = gm[ia][k] * std::conj(gm[ib][k]);
        s += w * (vp - vm);
        f += w * (vp + vm);
      }
      t.sign[ia * m + ib] = s;
      t.full[ia * m + ib] = f;
    }
  }
  return t;
}

// Correlator machinery shared by E, the norm check and the CHSH combination:
// mode rotations are applied once per distinct angle and the quadrature tables
// are built over the per-mode label unions.
class Evaluator {
 public:
  Evaluator(const DensityEnsemble& state, Complex ref, std::vector<double> angles1,
            std::vector<double> angles2, const QuadratureGridSpec& grid)
      : grid_(grid), angles1_(std::move(angles1)), angles2_(std::move(angles2)) {
    if (grid_.nodes_per_axis < 64)
      throw std::invalid_argument("nodes_per_axis must be >= 64");
    labels1_.resize(angles1_.size());
    labels2_.resize(angles2_.size());
    joint_.resize(angles1_.size(),
                  std::vector<std::vector<JointTerms>>(angles2_.size()));

    for (std::size_t i1 = 0; i1 < angles1_.size(); ++i1) {
      std::vector<cstate::Superposition> mode1_rotated;
      std::vector<double> probs;
      for (const auto& comp : state.components()) {
        if (comp.probability == 0.0) continue;
        probs.push_back(comp.probability);
        mode1_rotated.push_back(
            gates::apply_rotation({angles1_[i1], 0.0, ref}, comp.state, 1));
      }
      probs_ = probs;
      for (std::size_t i2 = 0; i2 < angles2_.size(); ++i2) {
        auto& slots = joint_[i1][i2];
        slots.resize(mode1_rotated.size());
        for (std::size_t c = 0; c < mode1_rotated.size(); ++c) {
          cstate::Superposition s =
              gates::apply_rotation({angles2_[i2], 0.0, ref}, mode1_rotated[c], 2);
          JointTerms jt;
          for (const auto& term : s.terms()) {
            jt.weights.push_back(term.weight);
            jt.idx1.push_back(find_or_add(labels1_[i1], term.ket.a1));
            jt.idx2.push_back(find_or_add(labels2_[i2], term.ket.a2));
          }
          slots[c] = std::move(jt);
        }
      }
    }
    x_max_ = grid_.x_max;
    if (x_max_ <= 0.0) {
      double m = 0.0;
      for (const auto& set : labels1_)
        for (Complex z : set) m = std::max(m, std::abs(z));
      for (const auto& set : labels2_)
        for (Complex z : set) m = std::max(m, std::abs(z));
      x_max_ = 2.0 * m + 8.0;
    }
  }

  // Values for every (angle1, angle2) combination, node count doubled until
  // every combination moves by less than the tolerance.
  std::vector<std::vector<double>> converged(bool sign_binned) const {
    int n = grid_.nodes_per_axis;
    auto prev = evaluate(n, sign_binned);
    while (2 * (n - 1) + 1 <= grid_.max_nodes) {
      n = 2 * (n - 1) + 1;  // refine every interval, keeping shared endpoints
      auto cur = evaluate(n, sign_binned);
      double delta = 0.0;
      for (std::size_t i = 0; i < cur.size(); ++i)
        for (std::size_t j = 0; j < cur[i].size(); ++j)
          delta = std::max(delta, std::abs(cur[i][j] - prev[i][j]));
      if (delta < grid_.convergence_tol) return cur;
      prev = std::move(cur);
    }
    throw num::ConvergenceError(
        "quadrature did not converge below tolerance after node doubling");
  }

 private:
  std::vector<std::vector<double>> evaluate(int n, bool sign_binned) const {
    std::vector<PairTable> t1(angles1_.size()), t2(angles2_.size());
    for (std::size_t i = 0; i < angles1_.size(); ++i) t1[i] = build_table(labels1_[i], x_max_, n);
    for (std::size_t i = 0; i < angles2_.size(); ++i) t2[i] = build_table(labels2_[i], x_max_, n);
    std::vector<std::vector<double>> out(angles1_.size(),
                                         std::vector<double>(angles2_.size(), 0.0));
    for (std::size_t i1 = 0; i1 < angles1_.size(); ++i1) {
      for (std::size_t i2 = 0; i2 < angles2_.size(); ++i2) {
        double tot = 0.0;
        for (std::size_t c = 0; c < probs_.size(); ++c) {
          const JointTerms& jt = joint_[i1][i2][c];
          Complex s = 0.0;
          const std::size_t nt = jt.weights.size();
          for (std::size_t i = 0; i < nt; ++i)
            for (std::size_t j = 0; j < nt; ++j)
              s += jt.weights[i] * std::conj(jt.weights[j]) *
                   t1[i1].at(jt.idx1[i], jt.idx1[j], sign_binned) *
                   t2[i2].at(jt.idx2[i], jt.idx2[j], sign_binned);
          tot += probs_[c] * s.real();
        }
        out[i1][i2] = tot;
      }
    }
    return out;
  }

  QuadratureGridSpec grid_;
  std::vector<double> angles1_, angles2_;
  std::vector<double> probs_;
  std::vector<std::vector<Complex>> labels1_, labels2_;
  std::vector<std::vector<std::vector<JointTerms>>> joint_;  // [i1][i2][component]
  double x_max_ = 0.0;
};

}  // namespace

Complex x_overlap(double x, Complex alpha) {
  const Complex d = 0.5 * x - alpha;
  return kXOverlapNorm * std::pow(2.0 * M_PI, -0.25) *
         std::exp(kI * alpha * alpha.imag() - d * d);
}

double correlation_E(const DensityEnsemble& state, double theta_a, double theta_b,
                     Complex reference_alpha, const QuadratureGridSpec& grid) {
  Evaluator ev(state, reference_alpha, {theta_a}, {theta_b}, grid);
  return ev.converged(true)[0][0];
}

double density_norm_check(const DensityEnsemble& state, double theta_a, double theta_b,
                          Complex reference_alpha, const QuadratureGridSpec& grid) {
  Evaluator ev(state, reference_alpha, {theta_a}, {theta_b}, grid);
  return ev.converged(false)[0][0];
}

double chsh_value(const DensityEnsemble& state, const ChshAngles& angles, Complex reference_alpha,
                  const QuadratureGridSpec& grid) {
  Evaluator ev(state, reference_alpha, {angles.theta1, angles.theta1p},
               {angles.theta2, angles.theta2p}, grid);
  auto e = ev.converged(true);
  return e[0][0] + e[0][1] + e[1][0] - e[1][1];
}

ChshMaximum chsh_maximize(const DensityEnsemble& state, Complex reference_alpha, int restarts,
                          std::uint64_t seed, const QuadratureGridSpec& grid) {
  if (restarts < 1) throw std::invalid_argument("chsh_maximize: restarts must be >= 1");

  auto objective = [&](const std::vector<double>& t) {
    double penalty = 0.0;
    std::array<double, 4> clipped{};
    for (int i = 0; i < 4; ++i) {
      const double v = t[i];
      const double lo = std::max(0.0, -v);
      const double hi = std::max(0.0, v - M_PI);
      penalty += lo * lo + hi * hi;
      clipped[i] = std::clamp(v, 0.0, M_PI);
    }
    const ChshAngles ang{clipped[0], clipped[1], clipped[2], clipped[3]};
    return -chsh_value(state, ang, reference_alpha, grid) + 1e4 * penalty;
  };

  struct RestartResult {
    double value = 0.0;
    std::array<double, 4> angles{};
  };
  std::vector<RestartResult> results(restarts);

  num::parallel_for(static_cast<std::size_t>(restarts), [&](std::size_t r) {
    num::Rng rng(num::Rng::stream_seed(seed, r));
    std::vector<double> x0(4);
    for (auto& v : x0) v = rng.uniform(0.0, M_PI);
    num::NelderMeadOptions opts;
    opts.max_iterations = 500;
    opts.diameter_tol = 1e-6;
    const num::NelderMeadResult res = num::nelder_mead(objective, x0, opts);
    RestartResult rr;
    rr.value = -res.value;
    for (int i = 0; i < 4; ++i) rr.angles[i] = std::clamp(res.x[i], 0.0, M_PI);
    results[r] = rr;
  });

  int best = 0;
  for (int r = 1; r < restarts; ++r)
    if (results[r].value > results[best].value) best = r;
  const auto& b = results[best];
  return {b.value, ChshAngles{b.angles[0], b.angles[1], b.angles[2], b.angles[3]}, best};
}

}  // namespace cvks::chsh
