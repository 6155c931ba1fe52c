#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "hlab/types.hpp"

namespace hlab {

/// Strictly increasing list of exponents with a declared minimum gap.
class ExponentLadder {
 public:
  ExponentLadder(std::vector<Real> exponents, Real min_gap);
  /// first, first + step, ..., count entries; min gap = step.
  static ExponentLadder arithmetic(Real first, Real step, std::size_t count);

  const std::vector<Real>& exponents() const { return exponents_; }
  std::size_t count() const { return exponents_.size(); }
  Real min_gap() const { return min_gap_; }
  Real operator[](std::size_t i) const { return exponents_[i]; }

 private:
  std::vector<Real> exponents_;
  Real min_gap_;
};

struct LadderSample {
  Real t;
  Complex value;
};

struct AsymptoticFit {
  ExponentLadder ladder;
  std::vector<Complex> coefficients;
  /// Richardson error estimate per coefficient.
  std::vector<Real> coefficient_errors;
  /// max |v - sum a_i t^e_i| / max |v| over the samples.
  Real residual_norm = 0;
  /// Largest noise amplification of the extrapolation tables used.
  Real condition_estimate = 1;
};

struct LadderFitOptions {
  Real max_condition = 1e8L;
};

/// Coefficients a_i of v(t) ~ sum a_i t^e_i as t -> 0, from samples on a
/// decreasing geometric grid t_j = t_0 r^j.
///
/// The coefficients are peeled off one at a time from the lowest exponent.
/// Each level divides the running residual by t^e_i and runs a generalized
/// Richardson table eliminating first the leftovers of earlier levels, then
/// the higher ladder exponents and their arithmetic continuation.
AsymptoticFit fit_ladder(const std::vector<LadderSample>& samples, const ExponentLadder& ladder,
                         const LadderFitOptions& options = {});

/// Geometric grid t_0 r^j, j < count.
std::vector<Real> geometric_grid(Real t0, Real ratio, std::size_t count);

/// Coefficients c_0..c_degree of the least-squares (interpolating when the
/// node count is degree + 1) polynomial through (z, value).
std::vector<Complex> fit_polynomial(const std::vector<std::pair<Complex, Complex>>& samples, std::size_t degree);

/// z_j = radius cos((2j + 1) pi / (2 count))
std::vector<Real> chebyshev_nodes(std::size_t count, Real radius);

struct XiFit {
  Complex constant;
  /// Coefficients of xi^0, xi^2, ..., xi^(2 floor(cap/2)).
  std::vector<Complex> coefficients;
  Real residual_norm = 0;
  Real condition_estimate = 1;
};

/// Fits an even polynomial in xi of degree <= degree_cap and returns its
/// constant term.
XiFit xi_constant_term(const std::vector<std::pair<Real, Complex>>& samples, std::size_t degree_cap);

}  // namespace hlab
