#include "hlab/curve.hpp"

#include <cmath>
#include <utility>

#include "hlab/errors.hpp"
#include "hlab/minkowski.hpp"

namespace hlab {

namespace {

// Extra Taylor orders kept at t = 0 before re-expanding nu near the origin.
constexpr std::size_t kNuExtraOrder = 8;

Jet lorentz_square(const std::vector<Jet>& v) {
  Jet g = v[0] * v[0];
  for (std::size_t i = 1; i < v.size(); ++i) g -= v[i] * v[i];
  return g;
}

}  // namespace

TimelikeCurve::TimelikeCurve(Point basepoint, DisplacementJets jets, Real half_width, std::string label)
    : basepoint_(std::move(basepoint)), jets_(std::move(jets)), half_width_(half_width), label_(std::move(label)) {
  MinkowskiSpace check(basepoint_.size());
  (void)check;
  if (!(half_width > 0)) throw DomainError("curve domain must be a non-empty interval");
}

TimelikeCurve TimelikeCurve::straight_line(Point x, Point u, Real half_width) {
  if (x.size() != u.size()) throw DomainError("dimension mismatch");
  if (classify(u) != CausalClassification::future_timelike)
    throw DomainError("straight line direction must be future timelike");
  auto jets = [u](Real t, std::size_t order) {
    std::vector<Jet> out;
    out.reserve(u.size());
    for (Real ui : u) out.push_back(Jet::variable(t, order) * ui);
    return out;
  };
  return TimelikeCurve(std::move(x), jets, half_width, "straight");
}

TimelikeCurve TimelikeCurve::hyperbolic(Point x, Real half_width) {
  const std::size_t d = x.size();
  auto jets = [d](Real t, std::size_t order) {
    std::vector<Jet> out(d, Jet(order));
    const Real sh = std::sinh(t);
    const Real ch = std::cosh(t);
    Real fact = 1;
    for (std::size_t j = 0; j <= order; ++j) {
      if (j > 0) fact *= Real(j);
      const bool even = j % 2 == 0;
      out[0][j] = (even ? sh : ch) / fact;
      out[1][j] = (even ? ch : sh) / fact;
    }
    // cosh t - 1 loses digits near 0; 2 sinh^2(t/2) does not.
    const Real half = std::sinh(t / 2);
    out[1][0] = 2 * half * half;
    return out;
  };
  return TimelikeCurve(std::move(x), jets, half_width, "hyperbolic");
}

TimelikeCurve TimelikeCurve::product_lift(Real xi) const {
  if (!(xi >= 1)) throw DomainError("product lift needs xi >= 1");
  const Real extra_speed = std::sqrt(xi * xi - 1);
  DisplacementJets base = jets_;
  auto jets = [base, xi, extra_speed](Real t, std::size_t order) {
    std::vector<Jet> out = base(xi * t, order);
    for (Jet& j : out) j = j.rescaled(xi);
    out.push_back(Jet::variable(t, order) * extra_speed);
    return out;
  };
  Point x = basepoint_;
  x.push_back(0);
  return TimelikeCurve(std::move(x), jets, half_width_ / xi, label_ + "_lift");
}

TimelikeCurve TimelikeCurve::reversed() const {
  DisplacementJets base = jets_;
  auto jets = [base](Real t, std::size_t order) {
    std::vector<Jet> out = base(-t, order);
    for (Jet& j : out) j = j.reflected();
    return out;
  };
  return TimelikeCurve(basepoint_, jets, half_width_, label_ + "_reversed");
}

std::vector<Jet> TimelikeCurve::displacement(Real t, std::size_t order) const { return jets_(t, order); }

Point TimelikeCurve::position(Real t) const {
  std::vector<Jet> j = jets_(t, 0);
  Point p = basepoint_;
  for (std::size_t i = 0; i < p.size(); ++i) p[i] += j[i].value();
  return p;
}

Point TimelikeCurve::velocity(Real t) const {
  std::vector<Jet> j = jets_(t, 1);
  Point v(j.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = j[i][1];
  return v;
}

Jet TimelikeCurve::big_gamma_jet(Real t, std::size_t order) const { return lorentz_square(jets_(t, order)); }

Jet TimelikeCurve::nu(Real t, std::size_t order) const {
  if (std::fabs(t) > kTaylorCutoff) {
    Jet tt = Jet::variable(t, order);
    return big_gamma_jet(t, order) / (tt * tt);
  }
  const std::size_t wide = order + 2 + kNuExtraOrder;
  if (wide >= Jet::kCapacity) throw PrecisionError("nu jet order too high");
  Jet at_zero = big_gamma_jet(0, wide).dropped_leading(2);
  return at_zero.shifted(t, order);
}

}  // namespace hlab
