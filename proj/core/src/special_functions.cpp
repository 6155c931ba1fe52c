#include "hlab/special_functions.hpp"

#include <array>
#include <cmath>
#include <string>

#include "hlab/errors.hpp"

namespace hlab {

Complex checked_divide(Complex numerator, Complex denominator) {
  if (denominator == Complex{0, 0}) {
    throw DivisionByZeroError("complex division by zero");
  }
  return numerator / denominator;
}

bool is_nonpositive_integer(Complex z) {
  return z.imag() == 0 && z.real() <= 0 && std::floor(z.real()) == z.real();
}

namespace {

// B_{2k} / (2k (2k-1)), k = 1..10
constexpr std::array<Real, 10> kStirling = {
    1.0L / 12.0L,
    -1.0L / 360.0L,
    1.0L / 1260.0L,
    -1.0L / 1680.0L,
    1.0L / 1188.0L,
    -691.0L / 360360.0L,
    1.0L / 156.0L,
    -3617.0L / 122400.0L,
    43867.0L / 244188.0L,
    -174611.0L / 125400.0L,
};

Complex log_gamma_stirling(Complex w) {
  const Complex inv = Real(1) / w;
  const Complex inv2 = inv * inv;
  Complex series = 0;
  Complex power = inv;
  for (Real c : kStirling) {
    series += c * power;
    power *= inv2;
  }
  return (w - Real(0.5)) * std::log(w) - w + Real(0.5) * std::log(2 * kPi) + series;
}

Complex gamma_right_half_plane(Complex z) {
  Complex shift_product = 1;
  Complex w = z;
  while (std::abs(w) < 20) {
    shift_product *= w;
    w += 1;
  }
  return std::exp(log_gamma_stirling(w)) / shift_product;
}

}  // namespace

Complex gamma(Complex z) {
  if (is_nonpositive_integer(z)) {
    throw PoleError("gamma: pole at non-positive integer " + std::to_string(static_cast<double>(z.real())));
  }
  if (z.real() < 0.5L) {
    // sin(pi z) computed with the real part reduced to keep integers exact
    const Real shift = std::round(z.real());
    const Complex reduced{z.real() - shift, z.imag()};
    Complex s = std::sin(kPi * reduced);
    if (static_cast<long long>(shift) % 2 != 0) s = -s;
    return kPi / (s * gamma_right_half_plane(Real(1) - z));
  }
  return gamma_right_half_plane(z);
}

Complex reciprocal_gamma(Complex z) {
  if (is_nonpositive_integer(z)) return 0;
  return Real(1) / gamma(z);
}

Complex generalized_binomial(Complex a, std::uint32_t n) {
  Complex result = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    result *= (a - Real(i)) / Real(i + 1);
  }
  return result;
}

Real factorial(std::uint32_t n) {
  Real result = 1;
  for (std::uint32_t i = 2; i <= n; ++i) result *= i;
  return result;
}

}  // namespace hlab
