#include <doctest.h>

#include <cmath>
#include <functional>
#include <random>
#include <utility>
#include <vector>

#include "hlab/asymptotic_fit.hpp"
#include "hlab/errors.hpp"
#include "test_support.hpp"

using namespace hlab;
using hlab::test::rel_error;

namespace {

std::vector<LadderSample> sample(const std::function<Complex(Real)>& v, Real t0, Real ratio, std::size_t count) {
  std::vector<LadderSample> out;
  for (Real t : geometric_grid(t0, ratio, count)) out.push_back({t, v(t)});
  return out;
}

}  // namespace

TEST_SUITE("asymptotic_fit") {
  TEST_CASE("ladder validation") {
    CHECK_THROWS_AS(ExponentLadder({}, 1), DomainError);
    CHECK_THROWS_AS(ExponentLadder({1, 1}, 0.5L), DomainError);
    CHECK_THROWS_AS(ExponentLadder({0, 1, 1.5L}, 1), DomainError);
    const ExponentLadder l = ExponentLadder::arithmetic(-1, 2, 4);
    CHECK(l.count() == 4);
    CHECK(l[3] == 5);
    CHECK(l.min_gap() == 2);
  }

  TEST_CASE("geometric grid and chebyshev nodes") {
    const std::vector<Real> t = geometric_grid(0.4L, 0.5L, 4);
    CHECK(t.back() == 0.05L);
    const std::vector<Real> z = chebyshev_nodes(5, 2);
    CHECK(std::fabs(z[2]) < 1e-18L);
    CHECK(std::fabs(z[0] - 2 * std::cos(kPi / 10)) < 1e-18L);
  }

  TEST_CASE("recovers a synthetic expansion with a tail") {
    // v(t) = 2 t^-1 - 3 t + 0.5 t^3 + sin-like tail in t^5, t^7, ...
    auto v = [](Real t) { return Complex(2 / t - 3 * t + 0.5L * t * t * t + std::pow(t, 5) * std::cos(t)); };
    const AsymptoticFit fit = fit_ladder(sample(v, 0.4L, 0.75L, 24), ExponentLadder::arithmetic(-1, 2, 3));
    CHECK(rel_error(fit.coefficients[0], 2) < 1e-12L);
    CHECK(rel_error(fit.coefficients[1], -3) < 1e-10L);
    CHECK(rel_error(fit.coefficients[2], 0.5L) < 1e-8L);
    CHECK(fit.coefficient_errors.size() == 3);
    CHECK(fit.condition_estimate >= 1);
  }

  TEST_CASE("non-integer exponents and complex coefficients") {
    const Complex a(1.5L, -0.5L), b(-0.25L, 2);
    auto v = [&](Real t) { return a * std::pow(t, -0.5L) + b * std::pow(t, 0.5L) + Complex(std::pow(t, 1.5L)); };
    const AsymptoticFit fit = fit_ladder(sample(v, 0.5L, 0.7L, 20), ExponentLadder::arithmetic(-0.5L, 1, 2));
    CHECK(rel_error(fit.coefficients[0], a) < 1e-12L);
    CHECK(rel_error(fit.coefficients[1], b) < 1e-10L);
  }

  TEST_CASE("peeling an exact finite expansion") {
    auto v = [](Real t) { return Complex(4 * t * t + 7 * t * t * t * t); };
    const AsymptoticFit fit = fit_ladder(sample(v, 0.4L, 0.75L, 16), ExponentLadder::arithmetic(2, 2, 2));
    CHECK(rel_error(fit.coefficients[0], 4) < 1e-8L);
    CHECK(rel_error(fit.coefficients[1], 7) < 1e-8L);
    CHECK(fit.residual_norm < 1e-8L);
  }

  TEST_CASE("zero data gives zero coefficients") {
    const AsymptoticFit fit =
        fit_ladder(sample([](Real) { return Complex(0); }, 0.4L, 0.75L, 12), ExponentLadder::arithmetic(0, 1, 3));
    for (const Complex& c : fit.coefficients) CHECK(c == Complex(0));
  }

  TEST_CASE("input validation") {
    auto v = [](Real t) { return Complex(t); };
    CHECK_THROWS_AS(fit_ladder(sample(v, 0.4L, 0.75L, 5), ExponentLadder::arithmetic(0, 1, 3)), DomainError);
    std::vector<LadderSample> bad = sample(v, 0.4L, 0.75L, 10);
    bad[4].t *= 1.01L;
    CHECK_THROWS_AS(fit_ladder(bad, ExponentLadder::arithmetic(0, 1, 2)), DomainError);
    CHECK_THROWS_AS(fit_ladder(sample(v, 0.1L, 1.2L, 10), ExponentLadder::arithmetic(0, 1, 2)), DomainError);
  }

  TEST_CASE("roughness beyond the noise floor is reported") {
    // Pure noise at a fixed relative level never contracts.
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> noise(-1e-3, 1e-3);
    std::vector<LadderSample> noisy;
    for (Real t : geometric_grid(0.4L, 0.75L, 20)) noisy.push_back({t, Complex(1 + Real(noise(rng)))});
    CHECK_THROWS_AS(fit_ladder(noisy, ExponentLadder::arithmetic(0, 1, 2)), NoiseFloorError);
  }

  TEST_CASE("polynomial fit") {
    std::vector<std::pair<Complex, Complex>> samples;
    auto p = [](Complex z) { return Complex(1, 2) - Real(3) * z + Real(0.5L) * z * z * z; };
    for (Real z : chebyshev_nodes(6, 0.5L)) samples.emplace_back(Complex(z), p(Complex(z)));
    const std::vector<Complex> c = fit_polynomial(samples, 3);
    CHECK(std::abs(c[0] - Complex(1, 2)) < 1e-16L);
    CHECK(std::abs(c[1] + Real(3)) < 1e-15L);
    CHECK(std::abs(c[2]) < 1e-14L);
    CHECK(std::abs(c[3] - Real(0.5L)) < 1e-14L);
    CHECK_THROWS_AS(fit_polynomial({{Complex(0), Complex(1)}}, 2), DegenerateNodesError);
    CHECK_THROWS_AS(fit_polynomial({{Complex(0.1L), Complex(1)}, {Complex(0.1L), Complex(2)}}, 1), DegenerateNodesError);
  }

  TEST_CASE("xi constant term") {
    std::vector<std::pair<Real, Complex>> samples;
    for (Real xi = 1.05L; xi < 1.51L; xi += 0.05L)
      samples.emplace_back(xi, Complex(0.7L - 0.2L * xi * xi + 0.03L * std::pow(xi, 4)));
    const XiFit fit = xi_constant_term(samples, 4);
    CHECK(rel_error(fit.constant, 0.7L) < 1e-10L);
    CHECK(rel_error(fit.coefficients[1], -0.2L) < 1e-9L);
    CHECK(rel_error(fit.coefficients[2], 0.03L) < 1e-8L);
    CHECK(fit.residual_norm < 1e-15L);
    CHECK_THROWS_AS(xi_constant_term({{0.9L, Complex(1)}, {1.2L, Complex(1)}}, 0), DomainError);
    CHECK_THROWS_AS(xi_constant_term({{1.2L, Complex(1)}}, 2), DegenerateNodesError);
  }
}
