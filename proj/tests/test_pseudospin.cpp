#include <doctest.h>

#include <cmath>

#include "cvks/numerics.hpp"
#include "cvks/pseudospin.hpp"

using namespace cvks;
using pfock::Axis;
using Complex = pfock::Complex;

TEST_CASE("parity-spin operators") {
  const int d = 8;
  const auto sx = pfock::pseudo_spin(Axis::X, d);
  const auto sy = pfock::pseudo_spin(Axis::Y, d);
  const auto sz = pfock::pseudo_spin(Axis::Z, d);

  // action on the lowest pair
  Eigen::VectorXcd e0 = Eigen::VectorXcd::Zero(d);
  e0(0) = 1.0;
  CHECK((sx * e0 - Eigen::VectorXcd::Unit(d, 1)).cwiseAbs().maxCoeff() == 0.0);
  CHECK((sz * e0 + e0).cwiseAbs().maxCoeff() == 0.0);

  // Hermitian, involutory
  for (const auto* m : {&sx, &sy, &sz}) {
    CHECK((*m - m->adjoint()).cwiseAbs().maxCoeff() == 0.0);
    CHECK((*m * *m - Eigen::MatrixXcd::Identity(d, d)).cwiseAbs().maxCoeff() == 0.0);
  }

  // [s_x, s_y] = 2i s_z exactly
  const Complex two_i(0.0, 2.0);
  CHECK((sx * sy - sy * sx - two_i * sz).cwiseAbs().maxCoeff() == 0.0);

  // triple products
  const Complex i(0.0, 1.0);
  CHECK((sz * sx * sy - i * Eigen::MatrixXcd::Identity(d, d)).cwiseAbs().maxCoeff() == 0.0);
  CHECK((sx * sz * sy + i * Eigen::MatrixXcd::Identity(d, d)).cwiseAbs().maxCoeff() == 0.0);

  CHECK_THROWS_AS(pfock::pseudo_spin(Axis::X, 7), std::invalid_argument);
}

TEST_CASE("truncated coherent vectors") {
  const auto vac = pfock::coherent_fock(0.0, 8);
  CHECK(vac.amplitudes(0) == Complex(1.0));
  CHECK(vac.amplitudes.tail(7).cwiseAbs().maxCoeff() == 0.0);

  const auto p = pfock::coherent_fock(1.0, 60);
  const auto m = pfock::coherent_fock(-1.0, 60);
  CHECK(std::abs(p.amplitudes.dot(m.amplitudes) - std::exp(-2.0)) < 1e-10);

  CHECK(pfock::coherent_fock(2.0, 40).amplitudes.squaredNorm() == doctest::Approx(1.0).epsilon(1e-10));

  CHECK_THROWS_AS(pfock::coherent_fock(4.0, 10), std::invalid_argument);
}

TEST_CASE("continuous superposition state") {
  pfock::SqueezedSpec spec;
  spec.r = 0.5;
  spec.quad_nodes = 64;
  const auto xi = pfock::xi_state(spec);
  CHECK(xi.state.modes == 2);
  CHECK(xi.state.amplitudes.squaredNorm() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(xi.norm_defect < 1e-8);

  // symmetric under swapping the two modes
  const int d = xi.state.dim_per_mode;
  double asym = 0.0;
  for (int n1 = 0; n1 < d; ++n1)
    for (int n2 = n1 + 1; n2 < d; ++n2)
      asym = std::max(asym, std::abs(xi.state.amplitudes(n1 * d + n2) -
                                     xi.state.amplitudes(n2 * d + n1)));
  CHECK(asym < 1e-14);

  // a fixed even truncation is honoured
  pfock::SqueezedSpec fixed = spec;
  fixed.dim = 80;
  CHECK(pfock::xi_state(fixed).dim_used == 80);
  fixed.dim = 7;
  CHECK_THROWS_AS(pfock::xi_state(fixed), std::invalid_argument);
  fixed.dim = 0;
  fixed.r = -1.0;
  CHECK_THROWS_AS(pfock::xi_state(fixed), std::invalid_argument);
  // far too small a truncation cannot represent the state
  pfock::SqueezedSpec tiny = spec;
  tiny.r = 1.0;
  tiny.dim = 6;
  CHECK_THROWS_AS(pfock::xi_state(tiny), num::ConvergenceError);
}

TEST_CASE("context expectations on the continuous state") {
  pfock::SqueezedSpec spec;
  spec.r = 0.5;
  const auto xi = pfock::xi_state(spec);
  const auto r2 = pfock::gamma_expectation_pseudospin(xi.state, pm::build_gamma(pm::GammaKind::Row, 2));
  CHECK(std::abs(r2 - Complex(1.0)) < 1e-6);
  CHECK(std::abs(r2 - Complex(1.0)) < 1e-12);  // in fact exact up to rounding
  const auto c3 = pfock::gamma_expectation_pseudospin(xi.state, pm::build_gamma(pm::GammaKind::Column, 3));
  CHECK(std::abs(c3 + Complex(1.0)) < 1e-12);
}

TEST_CASE("first context is exactly one on any normalised state") {
  num::Rng rng(61);
  const int d = 10;
  Eigen::VectorXcd v(d * d);
  for (int i = 0; i < d * d; ++i) v(i) = Complex(rng.normal(), rng.normal());
  v.normalize();
  pfock::FockState st{d, 2, v, true};
  const auto r1 = pfock::gamma_expectation_pseudospin(st, pm::build_gamma(pm::GammaKind::Row, 1));
  CHECK(std::abs(r1 - Complex(1.0)) < 1e-12);
}

TEST_CASE("context products are plus or minus the identity at even truncation") {
  const int d = 6;
  const int n = d * d;
  for (auto kind : {pm::GammaKind::Row, pm::GammaKind::Column}) {
    for (int k = 1; k <= 3; ++k) {
      const auto g = pfock::gamma_pseudospin_matrix(pm::build_gamma(kind, k), d);
      const double sign = (kind == pm::GammaKind::Column && k == 3) ? -1.0 : 1.0;
      CHECK((g - sign * Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff() < 1e-14);
    }
  }
}

TEST_CASE("contextuality sum is flat in the squeezing parameter") {
  const auto records = pfock::ks_pseudospin({0.1, 0.5, 1.0, 1.5});
  REQUIRE(records.size() == 4);
  for (const auto& rec : records) {
    CHECK(std::abs(rec.ks - 6.0) < 1e-4);
    CHECK(std::abs(rec.ks - 6.0) < 1e-10);  // parity-block exactness
    CHECK(rec.norm_defect < 1e-8);
  }
  const auto single = pfock::ks_pseudospin({0.7});
  CHECK(single.size() == 1);
}
