#include <doctest.h>

#include <cmath>
#include <cstring>
#include <vector>

#include "cvks/gates.hpp"
#include "cvks/homodyne_chsh.hpp"
#include "cvks/numerics.hpp"
#include "cvks/werner.hpp"

using namespace cvks;
using cstate::Complex;
using cstate::Superposition;

namespace {

// Test-side 1D quadrature of sign(x) |<x|state>|^2 for a single-mode state
// given as mode-1 labels of a superposition (mode 2 must be vacuum and is
// ignored). Uses x_overlap directly, trapezoid on [-xm, xm] split at 0.
double sign_expectation_1d(const Superposition& s, double x_max, int n) {
  auto density = [&](double x) {
    Complex amp = 0.0;
    for (const auto& t : s.terms()) amp += t.weight * chsh::x_overlap(x, t.ket.a1);
    return std::norm(amp);
  };
  const double h = x_max / (n - 1);
  double pos = 0.0, neg = 0.0;
  for (int k = 0; k < n; ++k) {
    const double w = (k == 0 || k == n - 1) ? 0.5 * h : h;
    pos += w * density(k * h);
    neg += w * density(-k * h);
  }
  return pos - neg;
}

double density_mass_1d(const Superposition& s, double x_max, int n) {
  auto density = [&](double x) {
    Complex amp = 0.0;
    for (const auto& t : s.terms()) amp += t.weight * chsh::x_overlap(x, t.ket.a1);
    return std::norm(amp);
  };
  const double h = x_max / (n - 1);
  double total = 0.0;
  for (int k = 1; k < n; ++k) {
    const double w = (k == n - 1) ? 0.5 * h : h;
    total += w * (density(k * h) + density(-k * h));
  }
  total += h * density(0.0);
  return total;
}

}  // namespace

TEST_CASE("quadrature amplitude is unit-normalised as printed") {
  for (Complex a : {Complex(1.3, 0.0), Complex(0.0, 0.0), Complex(0.7, -1.1), Complex(2.0, 0.5)}) {
    const auto s = Superposition::single(a, 0.0);
    const double mass = density_mass_1d(s, 2.0 * std::abs(a) + 10.0, 6001);
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-8));
  }
  // real label: density peaks at x = 2 alpha
  const double at_peak = std::norm(chsh::x_overlap(2.6, 1.3));
  CHECK(std::norm(chsh::x_overlap(2.0, 1.3)) < at_peak);
  CHECK(std::norm(chsh::x_overlap(3.2, 1.3)) < at_peak);
}

TEST_CASE("rotated joint density integrates to one") {
  const auto state = werner::build_werner({0.5, 1.0, 2.0});
  const double mass = chsh::density_norm_check(state, 1.1, 0.4, 2.0);
  CHECK(mass == doctest::Approx(1.0).epsilon(1e-6));
  // small labels put weight at the fold point x = 0; the mass must still close
  const cstate::DensityEnsemble small({{1.0, Superposition::single(0.4, -0.3)}});
  CHECK(chsh::density_norm_check(small, 2.2, 0.7, 1.0) == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("vacuum correlator vanishes by symmetry") {
  const cstate::DensityEnsemble vac({{1.0, Superposition::single(0.0, 0.0)}});
  CHECK(std::abs(chsh::correlation_E(vac, 0.0, 0.0, 1.0)) < 1e-12);
}

TEST_CASE("product states factorise") {
  const Complex a(1.2, 0.0), b(0.8, 0.0);
  const cstate::DensityEnsemble state({{1.0, Superposition::single(a, b)}});
  const double theta_a = 0.7, theta_b = 2.2, ref = 1.0;
  // tighten the quadrature gate so both sides sit at the h -> 0 limit
  chsh::QuadratureGridSpec grid;
  grid.nodes_per_axis = 4096;
  grid.convergence_tol = 1e-10;
  const double joint = chsh::correlation_E(state, theta_a, theta_b, ref, grid);

  const auto m1 = gates::apply_rotation({theta_a, 0.0, ref}, Superposition::single(a, 0.0), 1);
  const auto m2 = gates::apply_rotation({theta_b, 0.0, ref}, Superposition::single(b, 0.0), 1);
  double lmax = 0.0;
  for (const auto& t : m1.terms()) lmax = std::max(lmax, std::abs(t.ket.a1));
  for (const auto& t : m2.terms()) lmax = std::max(lmax, std::abs(t.ket.a1));
  const double x_max = 2.0 * lmax + 8.0;  // match the engine's derived window
  const double e1 = sign_expectation_1d(m1, x_max, 1 << 17);
  const double e2 = sign_expectation_1d(m2, x_max, 1 << 17);
  CHECK(joint == doctest::Approx(e1 * e2).epsilon(1e-8));
}

TEST_CASE("quadrature value agrees with a Monte-Carlo sampler") {
  // |2,2> with both bit-flip-free rotations: frozen quadrature value
  const cstate::DensityEnsemble state({{1.0, Superposition::single(2.0, 2.0)}});
  const double quad = chsh::correlation_E(state, M_PI, M_PI, 2.0);
  CHECK(quad == doctest::Approx(0.53998441307713685).epsilon(1e-7));

  // inverse-CDF sampling of the per-mode density (the state is a product, so
  // the modes sample independently)
  const auto rotated = gates::apply_rotation({M_PI, 0.0, 2.0}, Superposition::single(2.0, 0.0), 1);
  const double x_max = 2.0 * 2.4 + 8.0;
  const int grid_n = 1 << 16;
  std::vector<double> xs(grid_n), cdf(grid_n);
  auto density = [&](double x) {
    Complex amp = 0.0;
    for (const auto& t : rotated.terms()) amp += t.weight * chsh::x_overlap(x, t.ket.a1);
    return std::norm(amp);
  };
  double acc = 0.0;
  const double h = 2.0 * x_max / (grid_n - 1);
  for (int k = 0; k < grid_n; ++k) {
    xs[k] = -x_max + k * h;
    acc += density(xs[k]) * h;
    cdf[k] = acc;
  }
  for (auto& c : cdf) c /= acc;

  num::Rng rng(12345);
  const int samples = 10'000'000;
  long long pos = 0;
  for (int i = 0; i < samples; ++i) {
    const double u = rng.uniform();
    const auto it = std::lower_bound(cdf.begin(), cdf.end(), u);
    const double x = xs[std::min<std::size_t>(it - cdf.begin(), grid_n - 1)];
    pos += (x >= 0.0) ? 1 : -1;
  }
  const double e1_mc = static_cast<double>(pos) / samples;
  const double e_mc = e1_mc * e1_mc;  // identical independent modes
  CHECK(std::abs(quad - e_mc) < 1e-3);
}

TEST_CASE("correlators stay in [-1, 1] and the combination below the quantum ceiling") {
  num::Rng rng(9);
  const auto state = werner::build_werner({0.5, 1.0, 1.5});
  for (int i = 0; i < 6; ++i) {
    const double ta = rng.uniform(0, M_PI), tb = rng.uniform(0, M_PI);
    const double e = chsh::correlation_E(state, ta, tb, 1.5);
    CHECK(e >= -1.0 - 1e-9);
    CHECK(e <= 1.0 + 1e-9);
  }
  for (int i = 0; i < 4; ++i) {
    chsh::ChshAngles ang{rng.uniform(0, M_PI), rng.uniform(0, M_PI), rng.uniform(0, M_PI),
                         rng.uniform(0, M_PI)};
    const double v = chsh::chsh_value(state, ang, 1.5);
    CHECK(std::abs(v) <= 2.0 * std::sqrt(2.0) + 1e-3);
  }
}

TEST_CASE("equal angles collapse to twice a single correlator") {
  const auto state = werner::build_werner({0.5, 1.0, 1.5});
  const double t = 0.9;
  const double e = chsh::correlation_E(state, t, t, 1.5);
  const double v = chsh::chsh_value(state, {t, t, t, t}, 1.5);
  CHECK(v == doctest::Approx(2.0 * e).epsilon(1e-9));
  CHECK(std::abs(v) <= 2.0 + 1e-6);
}

TEST_CASE("node doubling changes accepted values by less than the gate") {
  const auto state = werner::build_werner({0.5, 1.0, 2.0});
  chsh::QuadratureGridSpec coarse;  // defaults: 512 start
  chsh::QuadratureGridSpec fine;
  fine.nodes_per_axis = 2048;
  const double a = chsh::correlation_E(state, 0.8, 1.9, 2.0, coarse);
  const double b = chsh::correlation_E(state, 0.8, 1.9, 2.0, fine);
  CHECK(std::abs(a - b) < 1e-6);
}

TEST_CASE("maximisation is deterministic and finds the violation") {
  const auto state = werner::build_werner({0.5, 1.0, 2.5});
  const auto r1 = chsh::chsh_maximize(state, 2.5, 6, 77);
  const auto r2 = chsh::chsh_maximize(state, 2.5, 6, 77);
  CHECK(std::memcmp(&r1.best, &r2.best, sizeof(double)) == 0);
  CHECK(r1.angles.theta1 == r2.angles.theta1);
  CHECK(r1.angles.theta2p == r2.angles.theta2p);
  CHECK(r1.best > 2.0);
  CHECK(r1.best <= 2.0 * std::sqrt(2.0) + 1e-3);

  // separable mixture stays at the classical bound (identically zero here)
  const auto sep = werner::build_werner({0.5, 0.0, 2.5});
  const auto r0 = chsh::chsh_maximize(sep, 2.5, 4, 77);
  CHECK(r0.best <= 2.0 + 5e-3);

  CHECK_THROWS_AS(chsh::chsh_maximize(state, 2.5, 0, 1), std::invalid_argument);
}
