#pragma once

#include "hlab/smooth_profile.hpp"
#include "hlab/types.hpp"

namespace hlab {

/// Continued Mellin transform at one argument: either a finite value or a
/// simple pole with its residue.
struct MellinValue {
  Complex argument;
  Complex value;
  bool is_pole = false;
  Complex residue;
};

/// int_0^inf h(t) t^(alpha-1) dt, continued to all alpha through the Taylor
/// series of h at 0 (up to h.max_order()). h must be compactly supported and
/// its series must converge on a neighbourhood of 0.
MellinValue mellin(const SmoothProfile& h, Complex alpha);

/// M(h)(alpha) / Gamma((alpha + 1) / 2), finite at the odd negative integers
/// where both numerator and denominator have simple poles.
Complex mellin_prime(const SmoothProfile& h, Complex alpha);

/// M(h)(beta) / Gamma(beta), finite for all beta.
Complex mellin_over_gamma(const SmoothProfile& h, Complex beta);

}  // namespace hlab
