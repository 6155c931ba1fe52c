#include "hlab/riesz.hpp"

#include <cmath>

#include "hlab/errors.hpp"
#include "hlab/mellin.hpp"
#include "hlab/special_functions.hpp"

namespace hlab {

namespace {

const Real kLn2 = std::log(Real(2));

Complex power_of_two(Complex e) { return std::exp(e * kLn2); }

// Highest order the nu jets can deliver near t = 0.
constexpr std::size_t kNuMaxOrder = 20;

}  // namespace

Complex c_alpha(Complex alpha, std::size_t d) {
  const Real dd = Real(d);
  return power_of_two(Real(1) - alpha) * std::pow(kPi, (2 - dd) / 2) * reciprocal_gamma(alpha / Real(2)) *
         reciprocal_gamma((alpha - dd + Real(2)) / Real(2));
}

Complex riesz_eval(Complex alpha, const Point& x, const Point& y, Branch branch) {
  const std::size_t d = x.size();
  if (!(alpha.real() > Real(d))) throw DomainError("riesz_eval is limited to the function regime Re a > d");
  Point v(d);
  for (std::size_t i = 0; i < d; ++i) v[i] = y[i] - x[i];
  const CausalClassification c = classify(v);
  const bool future = c == CausalClassification::future_timelike || c == CausalClassification::future_lightlike;
  const bool past = c == CausalClassification::past_timelike || c == CausalClassification::past_lightlike;
  if (c == CausalClassification::zero) return 0;
  if ((branch == Branch::future && !future) || (branch == Branch::past && !past)) return 0;
  const Real g = gamma_form(v);
  if (g == 0) return 0;
  return c_alpha(alpha, d) * std::exp((alpha - Real(d)) / Real(2) * std::log(g));
}

SmoothProfile nu_power_profile(const TimelikeCurve& w, Real p) {
  return SmoothProfile([w, p](Real t, std::size_t order) { return pow(w.nu(t, order), p); },
                       SmoothProfile::kUnbounded, kNuMaxOrder);
}

SmoothProfile nu_power_phase_profile(const TimelikeCurve& w, Real a, Real b, bool imaginary) {
  // nu^(a + ib) = nu^a (cos(b ln nu) + i sin(b ln nu))
  return SmoothProfile(
      [w, a, b, imaginary](Real t, std::size_t order) {
        Jet nu = w.nu(t, order);
        Jet s, c;
        sin_cos(log(nu) * b, s, c);
        return pow(nu, a) * (imaginary ? s : c);
      },
      SmoothProfile::kUnbounded, kNuMaxOrder);
}

Complex paired_riesz_along_curve(Complex alpha, const TimelikeCurve& w, const SmoothProfile& v_profile,
                                 const SmoothProfile& g) {
  const Real dd = Real(w.dimension());
  Complex prefactor =
      power_of_two(Real(2) - alpha) * std::pow(kPi, (2 - dd) / 2) * reciprocal_gamma(alpha / Real(2));
  if (prefactor == Complex(0)) return 0;
  // The formula assumes t > 0 runs into J_+; a past-directed curve swaps the branches.
  const Real orientation = w.velocity(0)[0] > 0 ? 1 : -1;
  prefactor *= orientation;
  const Complex p = (alpha - dd) / Real(2);
  const Complex argument = alpha - dd + Real(1);
  const SmoothProfile vg = product(v_profile, g);
  if (p.imag() == 0) {
    const SmoothProfile h = odd_part(product(nu_power_profile(w, p.real()), vg));
    return prefactor * mellin_prime(h, argument);
  }
  const SmoothProfile re = odd_part(product(nu_power_phase_profile(w, p.real(), p.imag(), false), vg));
  const SmoothProfile im = odd_part(product(nu_power_phase_profile(w, p.real(), p.imag(), true), vg));
  return prefactor * (mellin_prime(re, argument) + Complex(0, 1) * mellin_prime(im, argument));
}

Complex paired_riesz_along_curve(Complex alpha, const TimelikeCurve& w, const SmoothProfile& g) {
  return paired_riesz_along_curve(alpha, w, constant_profile(1), g);
}

}  // namespace hlab
