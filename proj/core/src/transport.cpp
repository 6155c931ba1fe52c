#include "hlab/transport.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "hlab/errors.hpp"
#include "hlab/quadrature.hpp"
#include "hlab/special_functions.hpp"

namespace hlab {

namespace {

// Physicists' Hermite polynomial H_n(u).
Real hermite(int n, Real u) {
  Real prev = 1;
  if (n == 0) return prev;
  Real cur = 2 * u;
  for (int k = 1; k < n; ++k) {
    Real next = 2 * u * cur - 2 * Real(k) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

// 4th-order central second difference.
template <class F>
Complex second_difference(F&& f, Real h) {
  return (-f(2 * h) + Real(16) * f(h) - Real(30) * f(0) + Real(16) * f(-h) - f(-2 * h)) / (12 * h * h);
}

template <class F>
Complex first_difference(F&& f, Real h) {
  return (-f(2 * h) + Real(8) * f(h) - Real(8) * f(-h) + f(-2 * h)) / (12 * h);
}

Point along(const Point& y, std::size_t axis, Real offset) {
  Point p = y;
  p[axis] += offset;
  return p;
}

}  // namespace

Real ConstantPotential::partial(const Point&, const std::vector<int>& orders) const {
  for (int o : orders)
    if (o != 0) return 0;
  return value_;
}

std::string ConstantPotential::describe() const {
  std::ostringstream os;
  os << "constant(" << static_cast<double>(value_) << ")";
  return os.str();
}

GaussianPotential::GaussianPotential(Real amplitude, Real width, Point center)
    : amplitude_(amplitude), width_(width), center_(std::move(center)) {
  if (!(width > 0)) throw DomainError("Gaussian width must be positive");
}

Real GaussianPotential::value(const Point& y) const {
  Real r2 = 0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    const Real u = y[i] - center_.at(i);
    r2 += u * u;
  }
  return amplitude_ * std::exp(-r2 / (width_ * width_));
}

Real GaussianPotential::partial(const Point& y, const std::vector<int>& orders) const {
  // The Gaussian factorizes; d^n/du^n exp(-u^2/w^2) = (-1/w)^n H_n(u/w) exp(-u^2/w^2).
  Real out = amplitude_;
  for (std::size_t i = 0; i < y.size(); ++i) {
    const int n = i < orders.size() ? orders[i] : 0;
    const Real u = (y[i] - center_.at(i)) / width_;
    out *= std::pow(-1 / width_, Real(n)) * hermite(n, u) * std::exp(-u * u);
  }
  return out;
}

std::string GaussianPotential::describe() const {
  std::ostringstream os;
  os << "gaussian(amplitude=" << static_cast<double>(amplitude_) << ", width=" << static_cast<double>(width_) << ")";
  return os.str();
}

SpacetimeModel SpacetimeModel::shifted_by(Complex z) const {
  SpacetimeModel m = *this;
  m.shift += z;
  return m;
}

Complex rho_apply(const SpacetimeModel& model, const Point& x, const Field& v, const Point& y, Real step) {
  const std::size_t d = model.dimension();
  Point grad(d);
  for (std::size_t i = 0; i < d; ++i) grad[i] = -2 * (y[i] - x[i]);
  auto along_grad = [&](Real lambda) {
    Point p = y;
    for (std::size_t i = 0; i < d; ++i) p[i] += lambda * grad[i];
    return v(p);
  };
  // box Gamma_x = 2 d for the flat model.
  const Real box_gamma = 2 * Real(d);
  return first_difference(along_grad, step) - (box_gamma / 2 - Real(d)) * v(y);
}

TransportSolver::TransportSolver(SpacetimeModel model, Point x, std::size_t max_k, Real fd_step)
    : model_(std::move(model)), x_(std::move(x)), max_k_(max_k), h_(fd_step) {
  if (x_.size() != model_.dimension()) throw DomainError("base point dimension mismatch");
  if (!model_.potential) throw DomainError("model has no potential");
}

void TransportSolver::check_in_box(const Point& y) const {
  for (std::size_t i = 0; i < y.size(); ++i)
    if (std::fabs(y[i] - x_[i]) > model_.box_half_width)
      throw ResolutionError("finite-difference stencil leaves the working box");
}

Complex TransportSolver::value(std::size_t k, const Point& y) const {
  if (k > max_k_) throw DomainError("coefficient index beyond the solver's max_k");
  check_in_box(y);
  if (k == 0) return 1;
  const std::size_t d = y.size();
  const Real kk = Real(k);
  Point p(d);
  auto integrand = [&](Real s) {
    for (std::size_t i = 0; i < d; ++i) p[i] = x_[i] + s * (y[i] - x_[i]);
    return std::pow(s, kk - 1) * apply_operator(k - 1, p);
  };
  return -kk * gauss_legendre(std::function<Complex(Real)>(integrand), 0, 1);
}

Complex TransportSolver::apply_operator(std::size_t k, const Point& y) const {
  if (k == 0) return model_.effective_potential(y);
  const std::size_t d = y.size();
  for (std::size_t i = 0; i < d; ++i) {
    check_in_box(along(y, i, 2 * h_));
    check_in_box(along(y, i, -2 * h_));
  }
  Complex box = 0;
  for (std::size_t i = 0; i < d; ++i) {
    const Complex dii = second_difference([&](Real o) { return value(k, along(y, i, o)); }, h_);
    box += (i == MinkowskiSpace::kTimeIndex) ? dii : -dii;
  }
  return box + model_.effective_potential(y) * value(k, y);
}

Complex TransportSolver::transport_residual(std::size_t k, const Point& y) const {
  if (k == 0) throw DomainError("transport residual is defined for k >= 1");
  Field vk = [this, k](const Point& p) { return value(k, p); };
  const Real kk = Real(k);
  return rho_apply(model_, x_, vk, y) - 2 * kk * vk(y) - 2 * kk * apply_operator(k - 1, y);
}

HadamardTable solve_transport(const SpacetimeModel& model, const Point& x, std::size_t max_k,
                              const std::vector<Point>& points) {
  TransportSolver solver(model, x, max_k);
  HadamardTable table;
  table.base = x;
  table.max_k = max_k;
  table.points = points;
  table.values.assign(max_k + 1, std::vector<Complex>(points.size()));
  for (std::size_t k = 0; k <= max_k; ++k)
    for (std::size_t i = 0; i < points.size(); ++i) table.values[k][i] = solver.value(k, points[i]);
  return table;
}

HadamardTable shift_coefficients(const HadamardTable& table, Complex z) {
  HadamardTable out = table;
  for (std::size_t k = 0; k <= table.max_k; ++k) {
    for (std::size_t i = 0; i < table.points.size(); ++i) {
      Complex sum = 0;
      Complex zm = 1;
      for (std::size_t m = 0; m <= k; ++m) {
        sum += generalized_binomial(Complex(Real(k)), static_cast<std::uint32_t>(m)) * zm * table.values[k - m][i];
        zm *= z;
      }
      out.values[k][i] = sum;
    }
  }
  return out;
}

Real ray_transport_residual(const TransportSolver& solver, std::size_t k, const Point& y, std::size_t samples,
                            Real t_min) {
  const Point& x = solver.base();
  Real worst = 0;
  Point p(x.size());
  for (std::size_t j = 0; j < samples; ++j) {
    const Real t = samples == 1 ? 1 : t_min + (1 - t_min) * Real(j) / Real(samples - 1);
    for (std::size_t i = 0; i < x.size(); ++i) p[i] = x[i] + t * (y[i] - x[i]);
    worst = std::max(worst, std::abs(solver.transport_residual(k, p)));
  }
  return worst;
}

}  // namespace hlab
