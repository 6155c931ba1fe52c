#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "hlab/minkowski.hpp"
#include "hlab/types.hpp"

namespace hlab {

/// Sign conventions of the flat scalar model, fixed once and tested.
/// Along y = x + t u the radial operator is
///   rho_x V = kRadialCoefficient * t dV/dt + kZeroOrderCoefficient * V,
/// and for a constant potential c = mu the coefficients are (kMassSign mu)^k.
namespace calibration {
inline constexpr Real kRadialCoefficient = -2;
inline constexpr Real kZeroOrderCoefficient = 0;
inline constexpr int kMassSign = -1;
}  // namespace calibration

/// Smooth scalar potential c(y) with partial derivatives up to total order 4.
class Potential {
 public:
  virtual ~Potential() = default;
  virtual Real value(const Point& y) const = 0;
  /// orders[i] is the derivative order in coordinate i.
  virtual Real partial(const Point& y, const std::vector<int>& orders) const = 0;
  virtual std::string describe() const = 0;
};

class ConstantPotential : public Potential {
 public:
  explicit ConstantPotential(Real value) : value_(value) {}
  Real value(const Point&) const override { return value_; }
  Real partial(const Point& y, const std::vector<int>& orders) const override;
  std::string describe() const override;

 private:
  Real value_;
};

/// A exp(-|y - center|^2 / width^2), Euclidean norm.
class GaussianPotential : public Potential {
 public:
  GaussianPotential(Real amplitude, Real width, Point center);
  Real value(const Point& y) const override;
  Real partial(const Point& y, const std::vector<int>& orders) const override;
  std::string describe() const override;

 private:
  Real amplitude_;
  Real width_;
  Point center_;
};

/// Flat d-dimensional model with P = box + c - shift, box = d_0^2 - sum d_i^2.
struct SpacetimeModel {
  MinkowskiSpace space;
  std::shared_ptr<const Potential> potential;
  /// Constant subtracted from the potential (the z of P - z).
  Complex shift = 0;
  /// Evaluations are allowed in the cube |y_i - x_i| <= box_half_width.
  Real box_half_width = 3;

  std::size_t dimension() const { return space.dimension(); }
  Complex effective_potential(const Point& y) const { return Complex(potential->value(y)) - shift; }
  SpacetimeModel shifted_by(Complex z) const;
};

using Field = std::function<Complex(const Point&)>;

/// rho_x V at y: directional derivative along grad Gamma_x = -2 (y - x) minus
/// (box Gamma_x / 2 - d) V, with the derivative taken by 4th-order differences.
Complex rho_apply(const SpacetimeModel& model, const Point& x, const Field& v, const Point& y,
                  Real step = 1e-3L);

/// Values V^k_x(y) on a set of points.
struct HadamardTable {
  Point base;
  std::size_t max_k = 0;
  std::vector<Point> points;
  /// values[k][i] = V^k_x(points[i])
  std::vector<std::vector<Complex>> values;

  Complex at(std::size_t k, std::size_t point_index) const { return values.at(k).at(point_index); }
};

/// Recursive transport solver:
///   V^0 = 1,  V^k(y) = -k int_0^1 s^(k-1) (P V^(k-1))(x + s (y - x)) ds,
/// with P V^(k-1) by 4th-order central differences of step fd_step.
class TransportSolver {
 public:
  TransportSolver(SpacetimeModel model, Point x, std::size_t max_k = 3, Real fd_step = 1e-2L);

  Complex value(std::size_t k, const Point& y) const;
  /// (P V^k)(y)
  Complex apply_operator(std::size_t k, const Point& y) const;
  /// (rho_x - 2k) V^k - 2k P V^(k-1) at y.
  Complex transport_residual(std::size_t k, const Point& y) const;

  const SpacetimeModel& model() const { return model_; }
  const Point& base() const { return x_; }
  std::size_t max_k() const { return max_k_; }

 private:
  void check_in_box(const Point& y) const;

  SpacetimeModel model_;
  Point x_;
  std::size_t max_k_;
  Real h_;
};

HadamardTable solve_transport(const SpacetimeModel& model, const Point& x, std::size_t max_k,
                              const std::vector<Point>& points);

/// Binomial recombination V^k(z) = sum_m binom(k, m) z^m V^(k-m).
HadamardTable shift_coefficients(const HadamardTable& table, Complex z);

/// Sup over points of |(rho_x - 2k) V^k - 2k P V^(k-1)| along the ray x -> y,
/// sampled at `samples` points with parameter in [t_min, 1].
Real ray_transport_residual(const TransportSolver& solver, std::size_t k, const Point& y, std::size_t samples,
                            Real t_min = 1e-3L);

}  // namespace hlab
