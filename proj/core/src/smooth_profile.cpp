#include "hlab/smooth_profile.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "hlab/errors.hpp"

namespace hlab {

SmoothProfile::SmoothProfile(JetFunction jet, Real support_radius, std::size_t max_order)
    : jet_(std::move(jet)), support_radius_(support_radius), max_order_(max_order) {
  if (!(support_radius > 0)) throw DomainError("support radius must be positive");
  if (max_order >= Jet::kCapacity) throw PrecisionError("profile order exceeds jet capacity");
}

Real SmoothProfile::operator()(Real t) const { return jet_(t, 0).value(); }

Real SmoothProfile::derivative(std::size_t n, Real t) const {
  if (n > max_order_) throw PrecisionError("derivative order exceeds the declared maximum");
  return jet_(t, n).derivative(n);
}

Jet SmoothProfile::jet(Real t, std::size_t order) const {
  if (compact() && std::fabs(t) >= support_radius_) return Jet(order);
  return jet_(t, order);
}

SmoothProfile constant_profile(Real value) {
  return SmoothProfile([value](Real, std::size_t order) { return Jet::constant(value, order); },
                       SmoothProfile::kUnbounded, Jet::kCapacity - 1);
}

SmoothProfile polynomial_profile(std::vector<Real> coefficients) {
  auto fn = [c = std::move(coefficients)](Real t, std::size_t order) {
    Jet poly(std::max(order, c.size()));
    for (std::size_t j = 0; j < c.size(); ++j) poly[j] = c[j];
    return poly.shifted(t, order);
  };
  return SmoothProfile(fn, SmoothProfile::kUnbounded, Jet::kCapacity - 1);
}

SmoothProfile cosine_profile() {
  return SmoothProfile(
      [](Real t, std::size_t order) {
        Jet s, c;
        sin_cos(Jet::variable(t, order), s, c);
        return c;
      },
      SmoothProfile::kUnbounded, Jet::kCapacity - 1);
}

namespace {

Jet bump_jet(Real t, std::size_t order) {
  if (std::fabs(t) >= 1) return Jet(order);
  Jet u = Jet::variable(t, order);
  u = u * u - Jet::constant(1, order);
  return exp(reciprocal(u));
}

}  // namespace

SmoothProfile bump_profile(std::size_t max_order) {
  return SmoothProfile(bump_jet, 1, max_order);
}

SmoothProfile odd_bump_profile(std::size_t max_order) {
  return SmoothProfile(
      [](Real t, std::size_t order) { return Jet::variable(t, order) * bump_jet(t, order); }, 1,
      max_order);
}

namespace {

SmoothProfile parity_part(const SmoothProfile& h, Real sign) {
  auto fn = [h, sign](Real t, std::size_t order) {
    Jet mirrored = h.jet(-t, order).reflected();
    Jet r = h.jet(t, order);
    for (std::size_t j = 0; j <= order; ++j) r[j] = (r[j] + sign * mirrored[j]) / 2;
    return r;
  };
  return SmoothProfile(fn, h.support_radius(), h.max_order());
}

}  // namespace

SmoothProfile odd_part(const SmoothProfile& h) { return parity_part(h, -1); }
SmoothProfile even_part(const SmoothProfile& h) { return parity_part(h, 1); }

SmoothProfile product(const SmoothProfile& a, const SmoothProfile& b) {
  return SmoothProfile([a, b](Real t, std::size_t order) { return a.jet(t, order) * b.jet(t, order); },
                       std::min(a.support_radius(), b.support_radius()),
                       std::min(a.max_order(), b.max_order()));
}

SmoothProfile sum(const SmoothProfile& a, const SmoothProfile& b) {
  return SmoothProfile([a, b](Real t, std::size_t order) { return a.jet(t, order) + b.jet(t, order); },
                       std::max(a.support_radius(), b.support_radius()),
                       std::min(a.max_order(), b.max_order()));
}

SmoothProfile multiplied(const SmoothProfile& h, Real factor) {
  return SmoothProfile([h, factor](Real t, std::size_t order) { return h.jet(t, order) * factor; },
                       h.support_radius(), h.max_order());
}

SmoothProfile dilated(const SmoothProfile& h, Real s) {
  if (!(s > 0)) throw DomainError("dilation factor must be positive");
  return SmoothProfile(
      [h, s](Real t, std::size_t order) { return h.jet(t / s, order).rescaled(1 / s); },
      h.support_radius() * s, h.max_order());
}

SmoothProfile derivative_profile(const SmoothProfile& h, std::size_t n) {
  if (n > h.max_order()) throw PrecisionError("derivative order exceeds the declared maximum");
  return SmoothProfile(
      [h, n](Real t, std::size_t order) {
        Jet j = h.jet(t, order + n);
        for (std::size_t i = 0; i < n; ++i) j = j.differentiated();
        return j;
      },
      h.support_radius(), h.max_order() - n);
}

Real parity_defect(const SmoothProfile& h, Real sign, Real extent, std::size_t points) {
  Real worst = 0;
  for (std::size_t i = 0; i < points; ++i) {
    Real t = extent * Real(i) / Real(points - 1);
    worst = std::max(worst, std::fabs(h(-t) - sign * h(t)));
  }
  return worst;
}

OddTestFunction::OddTestFunction(SmoothProfile profile) : profile_(std::move(profile)) {
  if (!profile_.compact()) throw DomainError("test function must be compactly supported");
  if (parity_defect(profile_, -1, profile_.support_radius()) > 1e-14L)
    throw DomainError("test function is not odd");
}

CutoffFunction::CutoffFunction(SmoothProfile profile) : profile_(std::move(profile)) {
  if (!profile_.compact() || profile_.support_radius() > 1)
    throw DomainError("cutoff must be supported in (-1, 1)");
}

}  // namespace hlab
