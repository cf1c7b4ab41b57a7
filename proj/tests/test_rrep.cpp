#include <doctest.h>

#include <cmath>

#include "cvks/numerics.hpp"
#include "cvks/rrep.hpp"

using namespace cvks;
using Complex = rrep::Complex;

namespace {

rrep::DensityMatrixFock vacuum_single(int d) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
  m(0, 0) = 1.0;
  return rrep::DensityMatrixFock(1, d, std::move(m));
}

rrep::DensityMatrixFock thermal_single(int d, double nbar) {
  Eigen::VectorXd diag(d);
  for (int n = 0; n < d; ++n) diag(n) = std::pow(nbar / (1.0 + nbar), n);
  diag /= diag.sum();
  Eigen::MatrixXcd m = diag.cast<Complex>().asDiagonal();
  return rrep::DensityMatrixFock(1, d, std::move(m));
}

}  // namespace

TEST_CASE("validation of density matrices") {
  Eigen::MatrixXcd bad = Eigen::MatrixXcd::Identity(4, 4);  // trace 4
  CHECK_THROWS_AS(rrep::DensityMatrixFock(1, 4, bad), std::invalid_argument);
  Eigen::MatrixXcd nh = Eigen::MatrixXcd::Zero(4, 4);
  nh(0, 0) = 1.0;
  nh(0, 1) = 0.5;  // not Hermitian
  CHECK_THROWS_AS(rrep::DensityMatrixFock(1, 4, nh), std::invalid_argument);
  CHECK_THROWS_AS(vacuum_single(5), std::invalid_argument);  // odd dim
}

TEST_CASE("representation of the vacuum is constant") {
  const auto rho = vacuum_single(20);
  for (Complex a : {Complex(0.3, 0.0), Complex(1.0, -0.7), Complex(0.0, 1.4)}) {
    for (Complex b : {Complex(0.0, 0.0), Complex(-0.8, 0.2)}) {
      CHECK(std::abs(rrep::r_function_single(rho, a, b) - Complex(1.0)) < 1e-12);
    }
  }
}

TEST_CASE("representation of a coherent projector") {
  const int d = 40;
  const Complex g(1.0, 0.0);
  const Eigen::VectorXcd v = pfock::coherent_amplitudes(g, d);
  Eigen::MatrixXcd m = v * v.adjoint();
  m /= m.trace().real();
  const rrep::DensityMatrixFock rho(1, d, std::move(m));
  for (Complex b : {Complex(0.5, 0.0), Complex(1.5, 0.3), Complex(0.0, 0.0)}) {
    const Complex r = rrep::r_function_single(rho, b, b) * std::exp(-std::norm(b));
    const double expected = std::exp(-std::norm(g - b));
    CHECK(std::abs(r - expected) < 1e-10);
  }
}

TEST_CASE("diagonal-weight normalization integral") {
  const auto rho = thermal_single(40, 0.5);
  const double integral = rrep::normalization_integral_single(rho);
  CHECK(std::abs(integral - 1.0) < 1e-4);
}

TEST_CASE("two-mode normalization integral for a random mixed state") {
  const auto rho = rrep::random_density(8, 3, 2024);
  const double integral = rrep::normalization_integral_two_mode(rho);
  CHECK(std::abs(integral - 1.0) < 1e-3);
}

TEST_CASE("factorised states have factorised representations") {
  const int d = 12;
  const auto ra = thermal_single(d, 0.3);
  const auto rb = thermal_single(d, 0.8);
  Eigen::MatrixXcd joint(d * d, d * d);
  for (int i1 = 0; i1 < d; ++i1)
    for (int j1 = 0; j1 < d; ++j1)
      for (int i2 = 0; i2 < d; ++i2)
        for (int j2 = 0; j2 < d; ++j2)
          joint(i1 * d + i2, j1 * d + j2) = ra.matrix()(i1, j1) * rb.matrix()(i2, j2);
  const rrep::DensityMatrixFock rho2(2, d, std::move(joint));
  const Complex a1(0.4, 0.1), a2(-0.3, 0.6), b1(0.2, -0.5), b2(0.9, 0.0);
  const Complex lhs = rrep::r_function_two_mode(rho2, a1, a2, b1, b2);
  const Complex rhs = rrep::r_function_single(ra, a1, b1) * rrep::r_function_single(rb, a2, b2);
  CHECK(std::abs(lhs - rhs) < 1e-12);
}

TEST_CASE("Hermitian symmetry of the representation") {
  const auto rho = thermal_single(30, 0.4);
  const Complex a(0.6, -0.2), b(-0.1, 0.9);
  const Complex lhs = rrep::r_function_single(rho, a, b);
  const Complex rhs = std::conj(rrep::r_function_single(rho, b, a));
  CHECK(std::abs(lhs - rhs) < 1e-12);
}

TEST_CASE("grid reconstruction round-trips at small dimension") {
  const auto rho = thermal_single(4, 0.3);
  rrep::PolarGridSpec grid;
  grid.radial_nodes = 128;
  grid.angular_nodes = 128;
  const Eigen::MatrixXcd rec = rrep::reconstruct_from_r(rho, grid);
  CHECK((rec - rho.matrix()).cwiseAbs().maxCoeff() < 1e-3);
}

TEST_CASE("contextuality sum equals 6 for arbitrary two-mode states") {
  for (int s = 0; s < 100; ++s) {
    const auto rho = rrep::random_density(6, 1 + (s % 36), num::Rng::stream_seed(99, s));
    CHECK(std::abs(rrep::ks_any_state(rho) - 6.0) < 1e-8);
  }

  // maximally mixed
  const int d = 8;
  Eigen::MatrixXcd mm = Eigen::MatrixXcd::Identity(d * d, d * d) / double(d * d);
  CHECK(std::abs(rrep::ks_any_state(rrep::DensityMatrixFock(2, d, std::move(mm))) - 6.0) < 1e-10);

  // pure random state vector
  num::Rng rng(7);
  Eigen::VectorXcd v(36);
  for (int i = 0; i < 36; ++i) v(i) = Complex(rng.normal(), rng.normal());
  v.normalize();
  Eigen::MatrixXcd proj = v * v.adjoint();
  proj = 0.5 * (proj + proj.adjoint().eval());
  CHECK(std::abs(rrep::ks_any_state(rrep::DensityMatrixFock(2, 6, std::move(proj))) - 6.0) < 1e-10);
}

TEST_CASE("random density construction") {
  const auto r1 = rrep::random_density(6, 1, 5);
  Eigen::MatrixXcd sq = r1.matrix() * r1.matrix();
  CHECK(std::abs(sq.trace().real() - 1.0) < 1e-12);  // rank 1 is pure

  const auto a = rrep::random_density(6, 10, 42);
  const auto b = rrep::random_density(6, 10, 42);
  CHECK((a.matrix() - b.matrix()).cwiseAbs().maxCoeff() == 0.0);

  // full-rank purity concentrates near (N + r)/(N r) = 2/D^2
  double mean = 0.0;
  const int seeds = 50;
  for (int s = 0; s < seeds; ++s) {
    const auto rho = rrep::random_density(6, 36, num::Rng::stream_seed(500, s));
    mean += (rho.matrix() * rho.matrix()).trace().real();
  }
  mean /= seeds;
  const double expected = 2.0 / 36.0;
  CHECK(mean > 0.8 * expected);
  CHECK(mean < 1.2 * expected);

  CHECK_THROWS_AS(rrep::random_density(6, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(rrep::random_density(6, 37, 1), std::invalid_argument);
}
