#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "hlab/jet.hpp"
#include "hlab/types.hpp"

namespace hlab {

/// Jets of the coordinates of w(t) - x at parameter t.
using DisplacementJets = std::function<std::vector<Jet>(Real t, std::size_t order)>;

/// Smooth curve through the base point x = w(0), given in closed form via
/// coordinate jets, defined on (-half_width, half_width).
class TimelikeCurve {
 public:
  /// Below this |t|, nu is evaluated from the Taylor expansion at 0.
  static constexpr Real kTaylorCutoff = 1e-3L;

  TimelikeCurve(Point basepoint, DisplacementJets jets, Real half_width, std::string label);

  /// x + t u, requires gamma_form(u) > 0 and u0 > 0.
  static TimelikeCurve straight_line(Point x, Point u, Real half_width = 10);
  /// x + (sinh t, cosh t - 1, 0, ...): unit speed, constant proper acceleration.
  static TimelikeCurve hyperbolic(Point x, Real half_width = 2);

  /// t -> (w(xi t), sqrt(xi^2 - 1) t) in one dimension more, xi >= 1.
  TimelikeCurve product_lift(Real xi) const;
  /// t -> w(-t). Past directed; used for parity checks.
  TimelikeCurve reversed() const;

  std::size_t dimension() const { return basepoint_.size(); }
  const Point& basepoint() const { return basepoint_; }
  Real half_width() const { return half_width_; }
  const std::string& label() const { return label_; }

  Point position(Real t) const;
  Point velocity(Real t) const;
  std::vector<Jet> displacement(Real t, std::size_t order) const;

  /// Jet of t -> Gamma_x(w(t)).
  Jet big_gamma_jet(Real t, std::size_t order) const;
  /// Jet of nu_w(t) = Gamma_x(w(t)) / t^2, smooth through t = 0.
  Jet nu(Real t, std::size_t order) const;
  Real nu_value(Real t) const { return nu(t, 0).value(); }

 private:
  Point basepoint_;
  DisplacementJets jets_;
  Real half_width_;
  std::string label_;
};

}  // namespace hlab
