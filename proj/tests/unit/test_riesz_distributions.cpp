#include <doctest.h>

#include <cmath>
#include <functional>

#include "hlab/curve.hpp"
#include "hlab/errors.hpp"
#include "hlab/minkowski.hpp"
#include "hlab/quadrature.hpp"
#include "hlab/riesz.hpp"
#include "hlab/smooth_profile.hpp"
#include "hlab/special_functions.hpp"
#include "test_support.hpp"

using namespace hlab;
using hlab::test::rel_error;

namespace {

// Function-regime pairing by direct quadrature of (R_+ - R_-)(a) along w.
Complex direct_pairing(Complex a, const TimelikeCurve& w, const SmoothProfile& v, const SmoothProfile& g) {
  const Point& x = w.basepoint();
  auto integrand = [&](Real t) -> Complex {
    const Point y = w.position(t);
    const Complex r = riesz_eval(a, x, y, Branch::future) - riesz_eval(a, x, y, Branch::past);
    return r * v(t) * g(t);
  };
  const Real r = g.support_radius();
  return integrate(std::function<Complex(Real)>(integrand), -r, 0) +
         integrate(std::function<Complex(Real)>(integrand), 0, r);
}

Point origin(std::size_t d) { return Point(d, 0); }

Point unit_time(std::size_t d) {
  Point u(d, 0);
  u[0] = 1;
  return u;
}

}  // namespace

TEST_SUITE("riesz_distributions") {
  TEST_CASE("gamma form and causal classification") {
    CHECK(gamma_form({1, 0, 0, 0}) == 1);
    CHECK(gamma_form({0, 1, 0}) == -1);
    CHECK(gamma_form({1, 1, 0}) == 0);
    CHECK(big_gamma({0, 0}, {0, 0}) == 0);
    CHECK(big_gamma({0, 0, 0}, {2, 0, 0}) == 4);
    CHECK(big_gamma({0, 0, 0}, {1, 2, 0}) == -3);
    CHECK(classify({2, 1}) == CausalClassification::future_timelike);
    CHECK(classify({-2, 1}) == CausalClassification::past_timelike);
    CHECK(classify({1, 1}) == CausalClassification::future_lightlike);
    CHECK(classify({-1, 1}) == CausalClassification::past_lightlike);
    CHECK(classify({0, 1}) == CausalClassification::spacelike);
    CHECK(classify({0, 0}) == CausalClassification::zero);
    CHECK(timelike_branch({0, 0}, {1, 0.3L}) == Branch::future);
    CHECK(timelike_branch({0, 0}, {-1, 0.3L}) == Branch::past);
    CHECK_THROWS_AS(timelike_branch({0, 0}, {0.2L, 1}), DomainError);
    CHECK_THROWS_AS(MinkowskiSpace(1), DomainError);
  }

  TEST_CASE("c_alpha") {
    CHECK(rel_error(c_alpha(Complex(2), 2), 0.5L) < 1e-18L);
    CHECK(c_alpha(Complex(0), 4) == Complex(0));
    CHECK(c_alpha(Complex(2), 4) == Complex(0));  // Gamma(0) in the second factor
    for (std::size_t d = 2; d <= 7; ++d)
      for (int k = 0; k <= 4; ++k) {
        const Real dd = Real(d);
        const Complex want = std::pow(Real(2), Real(-1 - 2 * k)) * std::pow(kPi, (2 - dd) / 2) /
                             factorial(std::uint32_t(k)) * reciprocal_gamma(Complex(Real(k) + 2 - dd / 2));
        const Complex got = c_alpha(Complex(2 * k + 2), d);
        CHECK(std::abs(got - want) <= 1e-16L * std::abs(want));
      }
  }

  TEST_CASE("riesz_eval in the function regime") {
    const Point x = origin(2);
    CHECK(riesz_eval(Complex(4), x, {0.2L, 1}, Branch::future) == Complex(0));
    CHECK(rel_error(riesz_eval(Complex(4), x, {2, 0}, Branch::future), c_alpha(Complex(4), 2) * Real(4)) < 1e-17L);
    CHECK(riesz_eval(Complex(4), x, {2, 0}, Branch::past) == Complex(0));
    // time reflection swaps the branches
    const Complex a(5.3L, 0.4L);
    CHECK(rel_error(riesz_eval(a, x, {1.5L, 0.7L}, Branch::future), riesz_eval(a, x, {-1.5L, 0.7L}, Branch::past)) <
          1e-17L);
    CHECK_THROWS_AS(riesz_eval(Complex(2), x, {2, 0}, Branch::future), DomainError);
  }

  TEST_CASE("nu of the model curves") {
    const TimelikeCurve line = TimelikeCurve::straight_line(origin(3), unit_time(3));
    for (Real t : {-0.7L, -1e-4L, 0.0L, 2e-4L, 0.4L}) CHECK(std::fabs(line.nu_value(t) - 1) < 1e-17L);
    const TimelikeCurve hyp = TimelikeCurve::hyperbolic(origin(2));
    CHECK(std::fabs(hyp.nu_value(0) - 1) < 1e-17L);
    for (Real t : {-1.3L, -0.5L, -5e-4L, 1e-5L, 8e-4L, 1e-3L, 0.2L, 1.1L}) {
      const Real want = std::pow(2 * std::sinh(t / 2) / t, Real(2));
      CHECK(std::fabs(hyp.nu_value(t) - want) < 1e-16L);
    }
    CHECK(std::fabs(hyp.nu_value(1) - hyp.nu_value(0)) > 1e-2L);
    // nu(0) equals gamma_form of the initial velocity
    const TimelikeCurve boosted = TimelikeCurve::straight_line(origin(2), {1.25L, 0.75L});
    CHECK(std::fabs(boosted.nu_value(0) - gamma_form(boosted.velocity(0))) < 1e-17L);
  }

  TEST_CASE("product lift of a unit-speed curve") {
    const TimelikeCurve hyp = TimelikeCurve::hyperbolic(origin(2));
    for (Real xi : {1.05L, 1.3L, 1.5L}) {
      const TimelikeCurve lifted = hyp.product_lift(xi);
      CHECK(lifted.dimension() == 3);
      CHECK(std::fabs(gamma_form(lifted.velocity(0)) - 1) < 1e-17L);
      CHECK(std::fabs(lifted.nu_value(0) - 1) < 1e-17L);
    }
  }

  TEST_CASE("curve pairing matches direct quadrature in the function regime") {
    const SmoothProfile g = dilated(bump_profile(), 0.8L);
    const SmoothProfile v = constant_profile(1);
    const TimelikeCurve line2 = TimelikeCurve::straight_line(origin(2), unit_time(2));
    const TimelikeCurve line4 = TimelikeCurve::straight_line(origin(4), unit_time(4));
    const TimelikeCurve hyp = TimelikeCurve::hyperbolic(origin(2));
    const SmoothProfile weight = polynomial_profile({1, 0.3L, -0.2L});
    CHECK(rel_error(paired_riesz_along_curve(Complex(3.5L), line2, g), direct_pairing(Complex(3.5L), line2, v, g)) <
          1e-9L);
    CHECK(rel_error(paired_riesz_along_curve(Complex(6.2L, 0.5L), line4, g),
                    direct_pairing(Complex(6.2L, 0.5L), line4, v, g)) < 1e-9L);
    CHECK(rel_error(paired_riesz_along_curve(Complex(4.4L), hyp, weight, g),
                    direct_pairing(Complex(4.4L), hyp, weight, g)) < 1e-9L);
  }

  TEST_CASE("even part of the pairing vanishes for time-symmetric data") {
    const TimelikeCurve line = TimelikeCurve::straight_line(origin(3), unit_time(3));
    // With V = 1 along a straight line the pairing only sees the odd part of g.
    const SmoothProfile odd = odd_bump_profile();
    const SmoothProfile even_g = product(odd, odd);
    for (Real a : {0.5L, 2.0L, 4.0L, 7.5L}) CHECK(std::abs(paired_riesz_along_curve(Complex(a), line, even_g)) < 1e-18L);
  }

  TEST_CASE("pairing is holomorphic across the integer lattice") {
    const TimelikeCurve line = TimelikeCurve::straight_line(origin(4), unit_time(4));
    const SmoothProfile f = odd_bump_profile();
    const Real h = 1e-3L;
    for (int a = -3; a <= 6; ++a) {
      const Complex centre = paired_riesz_along_curve(Complex(a), line, f);
      // fourth-order central average around the integer
      const Complex near = (Real(4) * (paired_riesz_along_curve(Complex(a + h), line, f) +
                                       paired_riesz_along_curve(Complex(a - h), line, f)) -
                            (paired_riesz_along_curve(Complex(a + 2 * h), line, f) +
                             paired_riesz_along_curve(Complex(a - 2 * h), line, f))) /
                           Real(6);
      CHECK(std::abs(centre - near) <= 1e-8L * std::max<Real>(1, std::abs(centre)));
    }
  }

  TEST_CASE("alpha to zero limit is a multiple of the odd derivative at the base point") {
    const SmoothProfile f = odd_bump_profile();
    for (std::size_t d : {2u, 3u, 4u}) {
      const TimelikeCurve line = TimelikeCurve::straight_line(origin(d), unit_time(d));
      const Complex at_zero = paired_riesz_along_curve(Complex(0), line, f);
      for (int j = 3; j <= 6; ++j) {
        const Complex near = paired_riesz_along_curve(Complex(std::pow(Real(10), Real(-j))), line, f);
        CHECK(std::abs(near - at_zero) <= 10 * std::pow(Real(10), Real(-j)) * std::max<Real>(1, std::abs(at_zero)));
      }
      // The limit pairs delta_x with the odd part, which vanishes at the base point.
      CHECK(std::abs(at_zero) < 1e-15L);
    }
  }

  TEST_CASE("time reversal of the curve negates the pairing") {
    const TimelikeCurve hyp = TimelikeCurve::hyperbolic(origin(2));
    const SmoothProfile f = odd_bump_profile();
    for (Real a : {2.0L, 4.0L, 5.5L})
      CHECK(rel_error(paired_riesz_along_curve(Complex(a), hyp.reversed(), f),
                      -paired_riesz_along_curve(Complex(a), hyp, f)) < 1e-14L);
  }
}
