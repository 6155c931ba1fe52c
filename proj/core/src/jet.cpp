#include "hlab/jet.hpp"

#include <algorithm>
#include <cmath>

#include "hlab/errors.hpp"

namespace hlab {

Jet::Jet(std::size_t order) : order_(order) {
  if (order >= kCapacity) throw PrecisionError("jet order exceeds capacity");
}

Jet Jet::constant(Real value, std::size_t order) {
  Jet j(order);
  j.c_[0] = value;
  return j;
}

Jet Jet::variable(Real at, std::size_t order) {
  Jet j(order);
  j.c_[0] = at;
  if (order >= 1) j.c_[1] = 1;
  return j;
}

Real Jet::derivative(std::size_t n) const {
  if (n > order_) throw PrecisionError("jet derivative beyond truncation order");
  Real f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return c_[n] * f;
}

Jet Jet::reflected() const {
  Jet r = *this;
  for (std::size_t j = 1; j <= order_; j += 2) r.c_[j] = -r.c_[j];
  return r;
}

Jet Jet::rescaled(Real factor) const {
  Jet r = *this;
  Real p = 1;
  for (std::size_t j = 0; j <= order_; ++j) {
    r.c_[j] *= p;
    p *= factor;
  }
  return r;
}

Jet Jet::differentiated() const {
  if (order_ == 0) throw PrecisionError("cannot differentiate an order-0 jet");
  Jet r(order_ - 1);
  for (std::size_t j = 0; j + 1 <= order_; ++j) r.c_[j] = c_[j + 1] * Real(j + 1);
  return r;
}

Jet Jet::shifted(Real offset, std::size_t order) const {
  // Horner-style Taylor shift of the polynomial sum c_j (offset + d)^j.
  Jet r(std::min(order, order_));
  std::array<Real, kCapacity> work = c_;
  for (std::size_t i = 0; i <= order_; ++i) {
    for (std::size_t j = order_; j > i; --j) work[j - 1] += offset * work[j];
  }
  for (std::size_t i = 0; i <= r.order_; ++i) r.c_[i] = work[i];
  return r;
}

Jet Jet::dropped_leading(std::size_t count) const {
  if (count > order_) throw PrecisionError("jet too short to drop leading terms");
  Jet r(order_ - count);
  for (std::size_t j = 0; j <= r.order_; ++j) r.c_[j] = c_[j + count];
  return r;
}

Jet Jet::truncated(std::size_t order) const {
  Jet r(std::min(order, order_));
  for (std::size_t j = 0; j <= r.order_; ++j) r.c_[j] = c_[j];
  return r;
}

Jet& Jet::operator+=(const Jet& other) {
  order_ = std::min(order_, other.order_);
  for (std::size_t j = 0; j <= order_; ++j) c_[j] += other.c_[j];
  for (std::size_t j = order_ + 1; j < kCapacity; ++j) c_[j] = 0;
  return *this;
}

Jet& Jet::operator-=(const Jet& other) {
  order_ = std::min(order_, other.order_);
  for (std::size_t j = 0; j <= order_; ++j) c_[j] -= other.c_[j];
  for (std::size_t j = order_ + 1; j < kCapacity; ++j) c_[j] = 0;
  return *this;
}

Jet& Jet::operator*=(Real scale) {
  for (std::size_t j = 0; j <= order_; ++j) c_[j] *= scale;
  return *this;
}

Jet operator+(Jet a, const Jet& b) { return a += b; }
Jet operator-(Jet a, const Jet& b) { return a -= b; }
Jet operator-(Jet a) { return a *= Real(-1); }
Jet operator*(Jet a, Real s) { return a *= s; }
Jet operator*(Real s, Jet a) { return a *= s; }

Jet operator*(const Jet& a, const Jet& b) {
  Jet r(std::min(a.order(), b.order()));
  for (std::size_t n = 0; n <= r.order(); ++n) {
    Real sum = 0;
    for (std::size_t j = 0; j <= n; ++j) sum += a[j] * b[n - j];
    r[n] = sum;
  }
  return r;
}

Jet reciprocal(const Jet& a) {
  if (a[0] == 0) throw DivisionByZeroError("reciprocal of a jet with zero constant term");
  Jet r(a.order());
  r[0] = 1 / a[0];
  for (std::size_t n = 1; n <= a.order(); ++n) {
    Real sum = 0;
    for (std::size_t j = 1; j <= n; ++j) sum += a[j] * r[n - j];
    r[n] = -sum * r[0];
  }
  return r;
}

Jet operator/(const Jet& a, const Jet& b) { return a * reciprocal(b); }

Jet exp(const Jet& a) {
  Jet r(a.order());
  r[0] = std::exp(a[0]);
  for (std::size_t n = 1; n <= a.order(); ++n) {
    Real sum = 0;
    for (std::size_t j = 1; j <= n; ++j) sum += Real(j) * a[j] * r[n - j];
    r[n] = sum / Real(n);
  }
  return r;
}

Jet log(const Jet& a) {
  if (!(a[0] > 0)) throw DomainError("log of a jet with non-positive constant term");
  Jet r(a.order());
  r[0] = std::log(a[0]);
  for (std::size_t n = 1; n <= a.order(); ++n) {
    Real sum = 0;
    for (std::size_t j = 1; j < n; ++j) sum += Real(j) * r[j] * a[n - j];
    r[n] = (a[n] - sum / Real(n)) / a[0];
  }
  return r;
}

Jet pow(const Jet& a, Real p) {
  if (!(a[0] > 0)) throw DomainError("pow of a jet with non-positive constant term");
  Jet r(a.order());
  r[0] = std::pow(a[0], p);
  for (std::size_t n = 1; n <= a.order(); ++n) {
    Real sum = 0;
    for (std::size_t j = 1; j <= n; ++j) sum += (p * Real(j) - Real(n - j)) * a[j] * r[n - j];
    r[n] = sum / (Real(n) * a[0]);
  }
  return r;
}

void sin_cos(const Jet& a, Jet& sine, Jet& cosine) {
  sine = Jet(a.order());
  cosine = Jet(a.order());
  sine[0] = std::sin(a[0]);
  cosine[0] = std::cos(a[0]);
  for (std::size_t n = 1; n <= a.order(); ++n) {
    Real s = 0;
    Real c = 0;
    for (std::size_t j = 1; j <= n; ++j) {
      s += Real(j) * a[j] * cosine[n - j];
      c += Real(j) * a[j] * sine[n - j];
    }
    sine[n] = s / Real(n);
    cosine[n] = -c / Real(n);
  }
}

}  // namespace hlab
