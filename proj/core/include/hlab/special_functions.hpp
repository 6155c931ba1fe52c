#pragma once

#include <cstdint>

#include "hlab/types.hpp"

namespace hlab {

/// Complex gamma function.
///
/// Upward recurrence to |z| >= 20 followed by a Stirling series with ten
/// Bernoulli terms; the reflection formula covers Re z < 1/2. Relative
/// error stays below 1e-16 for |Re z| <= 30, |Im z| <= 10.
/// Throws PoleError at non-positive integers.
Complex gamma(Complex z);

/// 1/Gamma(z), entire; exactly zero at non-positive integers.
Complex reciprocal_gamma(Complex z);

/// a (a-1) ... (a-n+1) / n!
Complex generalized_binomial(Complex a, std::uint32_t n);

Real factorial(std::uint32_t n);

}  // namespace hlab
