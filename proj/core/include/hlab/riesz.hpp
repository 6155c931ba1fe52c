#pragma once

#include <cstddef>

#include "hlab/curve.hpp"
#include "hlab/minkowski.hpp"
#include "hlab/smooth_profile.hpp"
#include "hlab/types.hpp"

namespace hlab {

/// 2^(1-a) pi^((2-d)/2) / (Gamma(a/2) Gamma((a-d+2)/2)), entire in a.
Complex c_alpha(Complex alpha, std::size_t d);

/// c_a Gamma_x(y)^((a-d)/2) on the closed cone of the given branch, else 0.
/// Only the function regime Re a > d is supported.
Complex riesz_eval(Complex alpha, const Point& x, const Point& y, Branch branch);

/// t -> nu_w(t)^p as a profile (complex p split into real and imaginary part).
SmoothProfile nu_power_profile(const TimelikeCurve& w, Real p);
SmoothProfile nu_power_phase_profile(const TimelikeCurve& w, Real a, Real b, bool imaginary);

/// Pairing of V * (R_+(a, x) - R_-(a, x)) pulled back along w with g,
/// defined for all a by the continued Mellin formula:
///   2^(2-a) pi^((2-d)/2) / Gamma(a/2) * M'((nu^((a-d)/2) V g)_odd)(a - d + 1)
/// v_profile is t -> V(w(t)). A past-directed w (w'(0) in the past cone)
/// negates the result, since t > 0 then runs into J_-.
Complex paired_riesz_along_curve(Complex alpha, const TimelikeCurve& w, const SmoothProfile& v_profile,
                                 const SmoothProfile& g);

/// Same pairing with V = 1.
Complex paired_riesz_along_curve(Complex alpha, const TimelikeCurve& w, const SmoothProfile& g);

}  // namespace hlab
