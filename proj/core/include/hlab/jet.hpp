#pragma once

#include <array>
#include <cstddef>

#include "hlab/types.hpp"

namespace hlab {

/// Truncated Taylor series c_0 + c_1 d + ... + c_n d^n of a function around
/// a fixed expansion point, with c_j = h^(j)(t0) / j!.
///
/// Fixed capacity, no allocation. Binary operations truncate to the lower
/// of the two orders.
class Jet {
 public:
  static constexpr std::size_t kCapacity = 32;

  Jet() = default;
  explicit Jet(std::size_t order);

  static Jet constant(Real value, std::size_t order);
  /// The identity function t expanded at `at`.
  static Jet variable(Real at, std::size_t order);

  std::size_t order() const { return order_; }
  Real operator[](std::size_t j) const { return c_[j]; }
  Real& operator[](std::size_t j) { return c_[j]; }
  Real value() const { return c_[0]; }

  /// h^(n)(t0) = n! c_n
  Real derivative(std::size_t n) const;

  /// Given the jet of h at t0, the jet of t -> h(-t) at -t0.
  Jet reflected() const;

  /// Jet of t -> h(factor * t) from the jet of h at factor * t0.
  Jet rescaled(Real factor) const;

  /// Jet of the derivative, one order lower.
  Jet differentiated() const;

  /// Re-expands the polynomial represented by this jet around `offset`.
  Jet shifted(Real offset, std::size_t order) const;

  /// Drops the first `count` coefficients (division by d^count).
  Jet dropped_leading(std::size_t count) const;

  Jet truncated(std::size_t order) const;

  Jet& operator+=(const Jet& other);
  Jet& operator-=(const Jet& other);
  Jet& operator*=(Real scale);

 private:
  std::array<Real, kCapacity> c_{};
  std::size_t order_ = 0;
};

Jet operator+(Jet a, const Jet& b);
Jet operator-(Jet a, const Jet& b);
Jet operator-(Jet a);
Jet operator*(const Jet& a, const Jet& b);
Jet operator*(Jet a, Real s);
Jet operator*(Real s, Jet a);
Jet operator/(const Jet& a, const Jet& b);

Jet reciprocal(const Jet& a);
Jet exp(const Jet& a);
/// Requires a[0] > 0.
Jet log(const Jet& a);
/// Requires a[0] > 0.
Jet pow(const Jet& a, Real p);
void sin_cos(const Jet& a, Jet& sine, Jet& cosine);

}  // namespace hlab
