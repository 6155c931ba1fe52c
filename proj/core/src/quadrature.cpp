#include "hlab/quadrature.hpp"

#include <cmath>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace hlab {

namespace bq = boost::math::quadrature;

namespace {

// The library's adaptive rule compares the error of the reference interval
// [-1, 1] against the scaled estimate, so short intervals never converge.
// Mapping every interval onto [-1, 1] first keeps the test consistent.
template <class Value>
Value integrate_unit(const std::function<Value(Real)>& f, Real a, Real b, const QuadratureOptions& options) {
  if (a == b) return Value(0);
  const Real mid = (a + b) / 2;
  const Real half = (b - a) / 2;
  auto mapped = [&](Real s) { return f(mid + half * s); };
  Real error = 0;
  Value unit = bq::gauss_kronrod<Real, 31>::integrate(mapped, Real(-1), Real(1), options.max_depth,
                                                      options.relative_tolerance, &error);
  return unit * half;
}

}  // namespace

Real integrate(const std::function<Real(Real)>& f, Real a, Real b, const QuadratureOptions& options) {
  return integrate_unit(f, a, b, options);
}

Complex integrate(const std::function<Complex(Real)>& f, Real a, Real b, const QuadratureOptions& options) {
  return integrate_unit(f, a, b, options);
}

Complex integrate_graded(const std::function<Complex(Real)>& f, Real a, Real b, unsigned levels,
                         const QuadratureOptions& options) {
  Complex total = 0;
  Real width = b - a;
  Real hi = b;
  for (unsigned i = 0; i < levels; ++i) {
    width /= 2;
    Real lo = a + width;
    total += integrate(f, lo, hi, options);
    hi = lo;
  }
  return total;
}

Real gauss_legendre(const std::function<Real(Real)>& f, Real a, Real b) {
  return bq::gauss<Real, 20>::integrate(f, a, b);
}

Complex gauss_legendre(const std::function<Complex(Real)>& f, Real a, Real b) {
  return bq::gauss<Real, 20>::integrate(f, a, b);
}

}  // namespace hlab
