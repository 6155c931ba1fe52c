#pragma once

#include <functional>

#include "hlab/types.hpp"

namespace hlab {

struct QuadratureOptions {
  Real relative_tolerance = 1e-16L;
  unsigned max_depth = 12;
};

/// Adaptive Gauss-Kronrod on [a, b].
Real integrate(const std::function<Real(Real)>& f, Real a, Real b, const QuadratureOptions& options = {});
Complex integrate(const std::function<Complex(Real)>& f, Real a, Real b,
                  const QuadratureOptions& options = {});

/// Same integral, with [a, b] cut into pieces that shrink geometrically
/// towards a. For integrands with an algebraic endpoint singularity at a;
/// the innermost piece of width (b - a) 2^-levels is dropped.
Complex integrate_graded(const std::function<Complex(Real)>& f, Real a, Real b, unsigned levels,
                         const QuadratureOptions& options = {});

/// Fixed Gauss-Legendre rule on [a, b] with 20 nodes.
Real gauss_legendre(const std::function<Real(Real)>& f, Real a, Real b);
Complex gauss_legendre(const std::function<Complex(Real)>& f, Real a, Real b);

}  // namespace hlab
