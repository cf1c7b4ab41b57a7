#include <doctest.h>

#include <cmath>

#include "cvks/cstate.hpp"
#include "cvks/numerics.hpp"

using namespace cvks;
using cstate::Complex;
using cstate::Superposition;
using cstate::Term;

namespace {

Complex random_label(num::Rng& rng, double radius = 2.0) {
  return {rng.uniform(-radius, radius), rng.uniform(-radius, radius)};
}

Superposition random_superposition(num::Rng& rng, int terms) {
  std::vector<Term> out;
  for (int i = 0; i < terms; ++i)
    out.push_back({Complex(rng.uniform(-1, 1), rng.uniform(-1, 1)),
                   {random_label(rng), random_label(rng)}});
  return Superposition(std::move(out));
}

// Truncated series sum_n (conj(a) b)^n / n! times the Gaussian prefactor.
Complex overlap_series(Complex a, Complex b, int truncation) {
  Complex sum = 0.0, term = 1.0;
  for (int n = 0; n <= truncation; ++n) {
    if (n > 0) term *= std::conj(a) * b / static_cast<double>(n);
    sum += term;
  }
  return sum * std::exp(-0.5 * (std::norm(a) + std::norm(b)));
}

}  // namespace

TEST_CASE("overlap of identical labels is exactly one") {
  CHECK(cstate::overlap(1.0, 1.0) == Complex(1.0));
  CHECK(cstate::overlap(Complex(0.3, -1.2), Complex(0.3, -1.2)) == Complex(1.0));
}

TEST_CASE("opposite-phase overlap") {
  CHECK(cstate::overlap(1.0, -1.0).real() == doctest::Approx(std::exp(-2.0)).epsilon(1e-14));
  CHECK(cstate::overlap(1.0, -1.0).imag() == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("overlap agrees with the truncated Fock series") {
  const Complex v = cstate::overlap(1.0, Complex(0.0, 1.0));
  const Complex s = overlap_series(1.0, Complex(0.0, 1.0), 60);
  CHECK(std::abs(v - s) < 1e-12);
  // frozen values from an independent evaluation
  CHECK(v.real() == doctest::Approx(0.19876611034641298).epsilon(1e-14));
  CHECK(v.imag() == doctest::Approx(0.30955987565311222).epsilon(1e-14));

  num::Rng rng(41);
  for (int i = 0; i < 50; ++i) {
    const Complex a = random_label(rng, 3.0), b = random_label(rng, 3.0);
    CHECK(std::abs(cstate::overlap(a, b) - overlap_series(a, b, 60)) < 1e-10);
  }
}

TEST_CASE("overlap magnitude identity") {
  num::Rng rng(7);
  for (int i = 0; i < 100; ++i) {
    const Complex a = random_label(rng, 3.0), b = random_label(rng, 3.0);
    const double expected = std::exp(-0.5 * std::norm(a - b));
    CHECK(std::abs(cstate::overlap(a, b)) == doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("inner products") {
  const auto k11 = Superposition::single(1.0, 1.0);
  CHECK(cstate::inner(k11, k11).real() == doctest::Approx(1.0).epsilon(1e-15));
  const auto km = Superposition::single(-1.0, -1.0);
  CHECK(cstate::inner(k11, km).real() == doctest::Approx(std::exp(-4.0)).epsilon(1e-13));
  CHECK(std::abs(cstate::inner(k11, km).imag()) < 1e-16);
}

TEST_CASE("inner is Hermitian and satisfies Cauchy-Schwarz") {
  num::Rng rng(11);
  for (int i = 0; i < 40; ++i) {
    const auto s1 = random_superposition(rng, 3);
    const auto s2 = random_superposition(rng, 4);
    const Complex ab = cstate::inner(s1, s2);
    const Complex ba = cstate::inner(s2, s1);
    CHECK(std::abs(ab - std::conj(ba)) < 1e-12);
    const double lhs = std::norm(ab);
    const double rhs = cstate::inner(s1, s1).real() * cstate::inner(s2, s2).real();
    CHECK(lhs <= rhs * (1.0 + 1e-12) + 1e-15);
  }
}

TEST_CASE("normalization") {
  // ECS weights scale by the analytic factor
  const double a = 0.75, alpha = 1.0;
  std::vector<Term> t{{std::sqrt(a), {alpha, alpha}}, {std::sqrt(1 - a), {-alpha, -alpha}}};
  const auto n = cstate::normalized(Superposition(t));
  const double expected =
      1.0 / std::sqrt(1.0 + 2.0 * std::sqrt(a * (1 - a)) * std::exp(-4.0 * alpha * alpha));
  CHECK(n.terms()[0].weight.real() == doctest::Approx(std::sqrt(a) * expected).epsilon(1e-12));
  CHECK(cstate::inner(n, n).real() == doctest::Approx(1.0).epsilon(1e-13));

  // already normalised single ket passes through
  const auto k = cstate::normalized(Superposition::single(0.4, -0.2));
  CHECK(k.terms()[0].weight.real() == doctest::Approx(1.0).epsilon(1e-13));

  // exact cancellation is an error
  std::vector<Term> zero{{1.0, {1.0, 0.0}}, {-1.0, {1.0, 0.0}}};
  CHECK_THROWS_AS((void)cstate::normalized(Superposition(zero)), cstate::DegenerateStateError);
}

TEST_CASE("pruning merges duplicates and drops dust") {
  std::vector<Term> t{{0.5, {1.0, 2.0}}, {0.5, {1.0, 2.0}}, {1e-16, {0.5, 0.5}}};
  const auto p = cstate::pruned(Superposition(t), 1e-12);
  REQUIRE(p.size() == 1);
  CHECK(p.terms()[0].weight.real() == doctest::Approx(1.0));

  num::Rng rng(3);
  for (int i = 0; i < 20; ++i) {
    const auto s = random_superposition(rng, 6);
    const auto q = cstate::pruned(s, 1e-12, 1e-14);
    CHECK(q.size() <= s.size());
    CHECK(std::abs(cstate::inner(q, q) - cstate::inner(s, s)) < 1e-10);
  }
}

TEST_CASE("ensemble validation") {
  const auto k = Superposition::single(1.0, 0.0);
  CHECK_THROWS_AS(cstate::DensityEnsemble({{0.5, k}}), std::invalid_argument);
  std::vector<Term> unnorm{{2.0, {1.0, 0.0}}};
  CHECK_THROWS_AS(cstate::DensityEnsemble({{1.0, Superposition(unnorm)}}), std::invalid_argument);
  CHECK_NOTHROW(cstate::DensityEnsemble({{0.25, k}, {0.75, k}}));
}

TEST_CASE("invalid construction is rejected") {
  CHECK_THROWS_AS(Superposition({}), std::invalid_argument);
  const double inf = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(Superposition({Term{1.0, {Complex(inf, 0), 0.0}}}), std::invalid_argument);
  CHECK_THROWS_AS(cstate::overlap(Complex(inf, 0), 1.0), std::invalid_argument);
}
