#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hlab/pipelines.hpp"
#include "hlab/smooth_profile.hpp"
#include "hlab/types.hpp"

namespace hlab {

struct MellinCheckOptions {
  std::vector<Real> real_parts = {-7.5L, -6.3L, -4.5L, -2.7L, -1.5L, -0.4L, 0.6L, 1.5L, 2.5L, 4.2L, 6.5L, 7.9L};
  std::vector<Real> imaginary_parts = {0, 0.7L};
  std::vector<Real> scales = {0.5L, 0.25L};
  int integer_min = -9;
  int integer_max = 9;
};

/// Scaling law M(h(./s))(a) = s^a M(h)(a), integration-by-parts consistency
/// M(h)(a) = -M(h')(a+1)/a, and finiteness of M'(f) at integers.
/// Metrics: max_scaling_error, max_ibp_error, nonfinite_prime_count.
ExtractionReport mellin_check(const SmoothProfile& odd_f, const SmoothProfile& even_h, const MellinCheckOptions& options);

struct MsExpOptions {
  Real alpha = 1;
  std::size_t terms = 4;
  std::size_t extra_slots = 4;
  GeometricGrid s_grid;
};

/// Fitted s-expansion of M'((h f_s)_odd)(alpha) against the closed form
/// msexp_coeff(k, alpha) h^(2k)(0) M'(f)(alpha + 2k).
ExtractionReport msexp_check(const SmoothProfile& h, const OddTestFunction& f, const MsExpOptions& options);

struct TransportCheckOptions {
  std::vector<std::size_t> dimensions = {2, 3};
  std::size_t k_max = 3;
  Real amplitude = 0.8L;
  Real width = 1.0L;
  std::vector<Complex> z_grid = {Complex(-0.3L), Complex(0.2L), Complex(0.45L), Complex(0.1L, 0.25L)};
  /// Residual of the transport equation is sampled on rays to these targets.
  std::size_t residual_samples = 5;
  Real fd_step = 1e-2L;
};

/// Shift consistency: transport(c - z) against the binomial recombination of
/// transport(c), plus transport-equation residuals along rays.
/// Metrics: max_shift_error, max_transport_residual.
ExtractionReport transport_check(const TransportCheckOptions& options);

/// Targets used for the shift-consistency check in dimension d.
std::vector<Point> transport_check_points(std::size_t d);

}  // namespace hlab
