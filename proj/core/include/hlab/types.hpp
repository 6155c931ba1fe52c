#pragma once

#include <complex>
#include <vector>

namespace hlab {

// Extended precision throughout: asymptotic peeling amplifies roundoff.
using Real = long double;
using Complex = std::complex<Real>;

/// Point or vector in R^d, coordinate 0 is time.
using Point = std::vector<Real>;

inline constexpr Real kPi = 3.141592653589793238462643383279502884197L;

/// Quotient that refuses an exactly-zero divisor.
Complex checked_divide(Complex numerator, Complex denominator);

/// True when z is real and an integer <= 0.
bool is_nonpositive_integer(Complex z);

}  // namespace hlab
