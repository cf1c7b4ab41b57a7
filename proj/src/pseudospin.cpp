#include "cvks/pseudospin.hpp"

#include <cmath>

#include "cvks/numerics.hpp"

namespace cvks::pfock {

namespace {

constexpr Complex kI{0.0, 1.0};

void check_even(int dim) {
  if (dim < 2 || dim % 2 != 0)
    throw std::invalid_argument("pseudo-spin operators need an even dimension >= 2");
}

// In-place action of one pseudo-spin operator on one mode of a two-mode
// amplitude vector (row-major: index = n1 * dim + n2).
void apply_axis(Axis axis, Eigen::VectorXcd& v, int dim, int mode) {
  const int stride = mode == 1 ? dim : 1;
  const int blocks = dim / 2;
  const int outer = dim;
  for (int o = 0; o < outer; ++o) {
    const int base = mode == 1 ? o : o * dim;
    for (int b = 0; b < blocks; ++b) {
      const int ie = base + (2 * b) * stride;
      const int io = base + (2 * b + 1) * stride;
      const Complex even = v(ie), odd = v(io);
      switch (axis) {
        case Axis::X:
          v(ie) = odd;
          v(io) = even;
          break;
        case Axis::Y:
          // s_y = i(|2n><2n+1| - |2n+1><2n|)
          v(ie) = kI * odd;
          v(io) = -kI * even;
          break;
        case Axis::Z:
          v(ie) = -even;
          v(io) = odd;
          break;
      }
    }
  }
}

Axis axis_for(pm::Pauli p) {
  switch (p) {
    case pm::Pauli::X: return Axis::X;
    case pm::Pauli::Y: return Axis::Y;
    case pm::Pauli::Z: return Axis::Z;
    case pm::Pauli::I: break;
  }
  throw std::invalid_argument("axis_for: identity");
}

}  // namespace

Eigen::MatrixXcd pseudo_spin(Axis axis, int dim) {
  check_even(dim);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (int n = 0; 2 * n + 1 < dim; ++n) {
    const int e = 2 * n, o = 2 * n + 1;
    switch (axis) {
      case Axis::X:
        m(o, e) = 1.0;
        m(e, o) = 1.0;
        break;
      case Axis::Y:
        m(e, o) = kI;
        m(o, e) = -kI;
        break;
      case Axis::Z:
        m(o, o) = 1.0;
        m(e, e) = -1.0;
        break;
    }
  }
  return m;
}

Eigen::VectorXcd coherent_amplitudes(Complex alpha, int dim) {
  if (dim < 1) throw std::invalid_argument("coherent_amplitudes: dim must be >= 1");
  Eigen::VectorXcd v(dim);
  Complex a = std::exp(-0.5 * std::norm(alpha));
  for (int n = 0; n < dim; ++n) {
    v(n) = a;
    a *= alpha / std::sqrt(static_cast<double>(n + 1));
  }
  return v;
}

FockState coherent_fock(Complex alpha, int dim) {
  Eigen::VectorXcd v = coherent_amplitudes(alpha, dim);
  const double tail = 1.0 - v.squaredNorm();
  if (tail > 1e-10)
    throw std::invalid_argument("coherent_fock: truncation tail mass " + std::to_string(tail) +
                                " exceeds 1e-10; increase dim");
  return {dim, 1, std::move(v), false};
}

XiState xi_state(const SqueezedSpec& spec) {
  if (!(spec.r > 0.0) || !std::isfinite(spec.r))
    throw std::invalid_argument("xi_state: r must be positive and finite");
  if (spec.quad_nodes < 16) throw std::invalid_argument("xi_state: quad_nodes must be >= 16");
  if (spec.dim != 0 && (spec.dim < 2 || spec.dim % 2 != 0))
    throw std::invalid_argument("xi_state: dim must be even");

  const double t = std::tanh(spec.r);
  const double c = (1.0 - t) / (2.0 * t);  // Gaussian weight exponent coefficient
  const double norm_sq_prefactor = 1.0 / (2.0 * M_PI * std::sinh(spec.r));

  struct Built {
    Eigen::VectorXcd amps;  // renormalised
    double defect;
    int dim;
  };

  auto build = [&](int nodes) -> Built {
    num::GaussHermite gh = num::gauss_hermite(nodes);
    // ket labels after the substitution t = sqrt(c) alpha and the balanced
    // beam-splitter scaling alpha/sqrt(2)
    std::vector<double> labels(nodes), weights(nodes);
    double wmax = 0.0;
    for (int k = 0; k < nodes; ++k) wmax = std::max(wmax, gh.weights[k]);
    double label_max = 0.0;
    int kept = 0;
    for (int k = 0; k < nodes; ++k) {
      if (gh.weights[k] < 1e-18 * wmax) continue;  // weightless tail nodes
      labels[kept] = gh.nodes[k] / std::sqrt(2.0 * c);
      weights[kept] = gh.weights[k];
      label_max = std::max(label_max, std::abs(labels[kept]));
      ++kept;
    }
    labels.resize(kept);
    weights.resize(kept);

    int dim = spec.dim;
    if (dim == 0) {
      // 10-sigma Poisson tail rule on the largest retained label
      int d = static_cast<int>(std::ceil(label_max * label_max + 10.0 * label_max));
      dim = std::max(40, d + (d % 2));
    }

    Eigen::VectorXcd acc = Eigen::VectorXcd::Zero(dim * dim);
    for (int k = 0; k < kept; ++k) {
      const Eigen::VectorXcd phi = coherent_amplitudes(labels[k], dim);
      // acc += w_k |phi> (x) |phi>
      for (int n1 = 0; n1 < dim; ++n1) {
        const Complex w = weights[k] * phi(n1);
        if (std::abs(w) < 1e-300) continue;
        acc.segment(n1 * dim, dim) += w * phi;
      }
    }
    const double raw_norm_sq = acc.squaredNorm() / c * norm_sq_prefactor;
    const double defect = std::abs(raw_norm_sq - 1.0);
    acc.normalize();
    return {std::move(acc), defect, dim};
  };

  int nodes = spec.quad_nodes;
  Built prev = build(nodes);
  while (2 * nodes <= 1024) {
    nodes *= 2;
    Built cur = build(nodes);
    // norm distance with the coarser state embedded in the finer truncation,
    // accumulated by direct subtraction so agreement resolves below 1e-8
    const int dmax = std::max(prev.dim, cur.dim);
    double dist_sq = 0.0;
    for (int n1 = 0; n1 < dmax; ++n1) {
      for (int n2 = 0; n2 < dmax; ++n2) {
        const Complex va = (n1 < prev.dim && n2 < prev.dim) ? prev.amps(n1 * prev.dim + n2)
                                                            : Complex(0.0);
        const Complex vb = (n1 < cur.dim && n2 < cur.dim) ? cur.amps(n1 * cur.dim + n2)
                                                          : Complex(0.0);
        dist_sq += std::norm(va - vb);
      }
    }
    const double dist = std::sqrt(dist_sq);
    if (dist < 1e-8) {
      if (cur.defect > 1e-6)
        throw num::ConvergenceError("xi_state: truncation too small (norm defect " +
                                    std::to_string(cur.defect) + ")");
      FockState st{cur.dim, 2, std::move(cur.amps), true};
      return {std::move(st), cur.defect, nodes, cur.dim};
    }
    prev = std::move(cur);
  }
  throw num::ConvergenceError("xi_state: quadrature did not stabilise below 1e-8");
}

Complex gamma_expectation_pseudospin(const FockState& state, const pm::GammaProduct& g) {
  if (state.modes != 2) throw std::invalid_argument("gamma_expectation_pseudospin: two-mode state required");
  const int dim = state.dim_per_mode;
  check_even(dim);
  Eigen::VectorXcd v = state.amplitudes;
  for (int f = 2; f >= 0; --f) {
    const auto& obs = g.factors[f];
    if (obs.mode1 != pm::Pauli::I) apply_axis(axis_for(obs.mode1), v, dim, 1);
    if (obs.mode2 != pm::Pauli::I) apply_axis(axis_for(obs.mode2), v, dim, 2);
  }
  return state.amplitudes.dot(v);  // Eigen dot conjugates the left argument
}

std::vector<PseudoSpinRecord> ks_pseudospin(const std::vector<double>& r_grid,
                                            const SqueezedSpec& base) {
  std::vector<PseudoSpinRecord> out(r_grid.size());
  num::parallel_for(r_grid.size(), [&](std::size_t i) {
    SqueezedSpec spec = base;
    spec.r = r_grid[i];
    XiState xi = xi_state(spec);
    auto expect = [&](pm::GammaKind kind, int k) {
      return gamma_expectation_pseudospin(xi.state, pm::build_gamma(kind, k)).real();
    };
    const double ks = expect(pm::GammaKind::Row, 1) + expect(pm::GammaKind::Row, 2) +
                      expect(pm::GammaKind::Row, 3) + expect(pm::GammaKind::Column, 1) +
                      expect(pm::GammaKind::Column, 2) - expect(pm::GammaKind::Column, 3);
    out[i] = {r_grid[i], ks, xi.norm_defect};
  });
  return out;
}

Eigen::MatrixXcd gamma_pseudospin_matrix(const pm::GammaProduct& g, int dim_per_mode) {
  check_even(dim_per_mode);
  const int d2 = dim_per_mode * dim_per_mode;
  auto op = [&](pm::Pauli p) -> Eigen::MatrixXcd {
    if (p == pm::Pauli::I) return Eigen::MatrixXcd::Identity(dim_per_mode, dim_per_mode);
    return pseudo_spin(axis_for(p), dim_per_mode);
  };
  Eigen::MatrixXcd total = Eigen::MatrixXcd::Identity(d2, d2);
  for (const auto& f : g.factors) {
    const Eigen::MatrixXcd m1 = op(f.mode1), m2 = op(f.mode2);
    Eigen::MatrixXcd kron(d2, d2);
    for (int i = 0; i < dim_per_mode; ++i)
      for (int j = 0; j < dim_per_mode; ++j)
        kron.block(i * dim_per_mode, j * dim_per_mode, dim_per_mode, dim_per_mode) = m1(i, j) * m2;
    total *= kron;
  }
  return total;
}

}  // namespace cvks::pfock
