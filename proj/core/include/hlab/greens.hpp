#pragma once

#include <cstddef>
#include <vector>

#include "hlab/curve.hpp"
#include "hlab/minkowski.hpp"
#include "hlab/smooth_profile.hpp"
#include "hlab/types.hpp"

namespace hlab {

/// Constant-coefficient family P = box - mass on flat R^d. Its causal
/// propagator is the entire Riesz series sum_k mass^k R(2k+2), and the
/// Hadamard coefficients are V^k = mass^k.
struct GreensFamily {
  std::size_t dimension = 4;
  Real mass = 0;
  std::size_t max_truncation = 60;
  /// Terms always kept, whatever the tail bound says. Coefficient extraction
  /// in the shift needs every term that feeds a fitted coefficient.
  std::size_t min_truncation = 0;
  /// Tail target relative to the largest retained term.
  Real relative_tail = 1e-12L;

  /// Same operator on M x R.
  GreensFamily lifted() const;
};

/// Cached per-k pairings T_k = <R(2k+2) along w, g>, so that the pairing
/// of the family shifted by z is sum_k (mass + z)^k T_k for every z with
/// |mass + z| <= max_shift.
class RieszSeriesPairing {
 public:
  RieszSeriesPairing(const GreensFamily& family, const TimelikeCurve& w, const SmoothProfile& g, Real max_shift);

  Complex evaluate(Complex shift) const;
  const std::vector<Complex>& terms() const { return terms_; }
  std::size_t truncation() const { return terms_.size() - 1; }
  /// Bound on the dropped tail at |shift| = max_shift.
  Real tail_bound() const { return tail_bound_; }
  Real max_shift() const { return max_shift_; }

 private:
  std::vector<Complex> terms_;
  Real max_shift_;
  Real tail_bound_ = 0;
};

/// <G_{P - z} pulled back along w, g>, P = box - mass in dimension fam.dimension.
Complex pair_greens_along_curve(const GreensFamily& fam, Complex z, const TimelikeCurve& w, const SmoothProfile& g);

/// Same pairing for the family lifted to M x R along a curve there.
Complex product_pair_greens(const GreensFamily& fam, Complex z, const TimelikeCurve& lifted_curve,
                            const SmoothProfile& g);

/// Single-branch Green's operator of the lifted family, restricted to the
/// line {y} x R and paired with r -> |r| chi((Gamma_x(y) - r^2) / eps).
/// Returns 0 when the branch does not contain y.
Complex offdiag_pair_greens(const GreensFamily& fam, Complex z, const Point& x, const Point& y, Real eps,
                            const SmoothProfile& chi, Branch branch);

/// Term k of the series above without the shift power:
/// 2^(-1-2k) pi^((1-d)/2) / k! * (M(chi)/Gamma)(k + (3-d)/2) * eps^(k + (3-d)/2)
Complex offdiag_term(std::size_t d, std::size_t k, Real eps, const SmoothProfile& chi);

}  // namespace hlab
