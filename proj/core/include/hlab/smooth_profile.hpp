#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <vector>

#include "hlab/jet.hpp"
#include "hlab/types.hpp"

namespace hlab {

/// Produces the Taylor jet of a function at t up to the requested order.
using JetFunction = std::function<Jet(Real t, std::size_t order)>;

/// Smooth real function of one variable, described through its jets.
///
/// support_radius is finite for compactly supported profiles (the function
/// vanishes for |t| >= support_radius) and +inf otherwise. max_order is the
/// highest derivative the profile promises to deliver.
class SmoothProfile {
 public:
  static constexpr std::size_t kDefaultMaxOrder = Jet::kCapacity - 1;
  static constexpr Real kUnbounded = std::numeric_limits<Real>::infinity();

  SmoothProfile(JetFunction jet, Real support_radius, std::size_t max_order = kDefaultMaxOrder);

  Real operator()(Real t) const;
  /// n-th derivative at t, n <= max_order().
  Real derivative(std::size_t n, Real t) const;
  Jet jet(Real t, std::size_t order) const;

  Real support_radius() const { return support_radius_; }
  bool compact() const { return support_radius_ < kUnbounded; }
  std::size_t max_order() const { return max_order_; }

 private:
  JetFunction jet_;
  Real support_radius_;
  std::size_t max_order_;
};

// Building blocks.
SmoothProfile constant_profile(Real value);
/// sum_j coefficients[j] t^j
SmoothProfile polynomial_profile(std::vector<Real> coefficients);
SmoothProfile cosine_profile();
/// exp(1/(t^2 - 1)) on (-1, 1), zero elsewhere.
SmoothProfile bump_profile(std::size_t max_order = SmoothProfile::kDefaultMaxOrder);
/// t exp(1/(t^2 - 1)) on (-1, 1), zero elsewhere.
SmoothProfile odd_bump_profile(std::size_t max_order = SmoothProfile::kDefaultMaxOrder);

// Combinators.
SmoothProfile odd_part(const SmoothProfile& h);
SmoothProfile even_part(const SmoothProfile& h);
SmoothProfile product(const SmoothProfile& a, const SmoothProfile& b);
SmoothProfile sum(const SmoothProfile& a, const SmoothProfile& b);
SmoothProfile multiplied(const SmoothProfile& h, Real factor);
/// t -> h(t / s), s > 0.
SmoothProfile dilated(const SmoothProfile& h, Real s);
/// n-th derivative as a profile with max order reduced by n.
SmoothProfile derivative_profile(const SmoothProfile& h, std::size_t n = 1);

/// Max |h(-t) - sign * h(t)| over an even grid on [0, extent].
Real parity_defect(const SmoothProfile& h, Real sign, Real extent, std::size_t points = 401);

/// Odd, compactly supported profile. Oddness is checked on construction.
class OddTestFunction {
 public:
  explicit OddTestFunction(SmoothProfile profile);
  static OddTestFunction standard() { return OddTestFunction(odd_bump_profile()); }
  const SmoothProfile& profile() const { return profile_; }

 private:
  SmoothProfile profile_;
};

/// Compactly supported profile with support inside (-1, 1).
class CutoffFunction {
 public:
  explicit CutoffFunction(SmoothProfile profile);
  static CutoffFunction standard() { return CutoffFunction(bump_profile()); }
  const SmoothProfile& profile() const { return profile_; }

 private:
  SmoothProfile profile_;
};

}  // namespace hlab
