#include "hlab/asymptotic_fit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Dense>

#include "hlab/errors.hpp"

namespace hlab {

namespace {

using CMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;
using CVector = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;

// A slot whose extrapolation error is this small relative to the data is
// settled even when its Richardson table no longer contracts (roundoff).
constexpr Real kResolvableFraction = 1e-12L;

struct TableChoice {
  Complex value;
  Real error = std::numeric_limits<Real>::infinity();
  Real amplification = 1;
};

// Generalized Richardson table on a geometric grid: column m removes a term
// b t^p_m using rho = r^p_m. Returns the entry with the smallest local
// disagreement among its neighbours.
TableChoice richardson(const std::vector<Complex>& seq, Real ratio, const std::vector<Real>& eliminate) {
  const std::size_t n = seq.size();
  std::vector<std::vector<Complex>> table{seq};
  std::vector<Real> amplification{1};
  for (std::size_t m = 1; m <= eliminate.size() && m < n; ++m) {
    const Real rho = std::pow(ratio, eliminate[m - 1]);
    const std::vector<Complex>& prev = table.back();
    std::vector<Complex> next(prev.size() - 1);
    for (std::size_t j = 0; j + 1 < prev.size(); ++j) next[j] = (prev[j + 1] - rho * prev[j]) / (1 - rho);
    amplification.push_back(amplification.back() * (1 + std::fabs(rho)) / std::fabs(1 - rho));
    table.push_back(std::move(next));
  }

  TableChoice best;
  for (std::size_t m = 1; m < table.size(); ++m) {
    const std::vector<Complex>& col = table[m];
    const std::vector<Complex>& prev = table[m - 1];
    for (std::size_t j = 0; j + 1 < col.size(); ++j) {
      const Real err = std::max({std::abs(col[j] - prev[j]), std::abs(col[j] - prev[j + 1]), std::abs(col[j] - col[j + 1])});
      if (err < best.error) {
        best.value = col[j];
        best.error = err;
        best.amplification = amplification[m];
      }
    }
  }
  if (!std::isfinite(best.error)) {
    best.value = seq.back();
    best.error = 0;
  }
  return best;
}

}  // namespace

ExponentLadder::ExponentLadder(std::vector<Real> exponents, Real min_gap)
    : exponents_(std::move(exponents)), min_gap_(min_gap) {
  if (exponents_.empty()) throw DomainError("exponent ladder is empty");
  for (std::size_t i = 1; i < exponents_.size(); ++i) {
    const Real gap = exponents_[i] - exponents_[i - 1];
    if (!(gap > 0)) throw DomainError("ladder exponents must be strictly increasing");
    if (gap < min_gap * (1 - 1e-12L)) throw DomainError("ladder gap below the declared minimum");
  }
}

ExponentLadder ExponentLadder::arithmetic(Real first, Real step, std::size_t count) {
  std::vector<Real> e(count);
  for (std::size_t i = 0; i < count; ++i) e[i] = first + step * Real(i);
  return ExponentLadder(std::move(e), step);
}

std::vector<Real> geometric_grid(Real t0, Real ratio, std::size_t count) {
  std::vector<Real> t(count);
  Real v = t0;
  for (std::size_t j = 0; j < count; ++j) {
    t[j] = v;
    v *= ratio;
  }
  return t;
}

AsymptoticFit fit_ladder(const std::vector<LadderSample>& samples, const ExponentLadder& ladder,
                         const LadderFitOptions& options) {
  const std::size_t n = samples.size();
  const std::size_t count = ladder.count();
  if (n < count + 4) throw DomainError("fit_ladder needs at least count + 4 samples");
  for (const LadderSample& s : samples)
    if (!(s.t > 0)) throw DomainError("ladder abscissae must be positive");
  const Real ratio = samples[1].t / samples[0].t;
  if (!(ratio > 0 && ratio < 1)) throw DomainError("ladder abscissae must decrease");
  for (std::size_t j = 1; j < n; ++j)
    if (std::fabs(samples[j].t / samples[j - 1].t - ratio) > 1e-9L * ratio)
      throw DomainError("ladder abscissae must form a geometric grid");

  const std::vector<Real>& e = ladder.exponents();
  // Exponents beyond the ladder continue with its last gap.
  const Real tail_gap = count > 1 ? e[count - 1] - e[count - 2] : ladder.min_gap();

  AsymptoticFit fit{ladder, {}, {}, 0, 1};
  std::vector<Complex> residual(n);
  Real scale = 0;
  for (std::size_t j = 0; j < n; ++j) {
    residual[j] = samples[j].value;
    scale = std::max(scale, std::abs(samples[j].value));
  }

  auto eliminations = [&](std::size_t i) {
    std::vector<Real> eliminate;
    for (std::size_t p = i; p-- > 0;) eliminate.push_back(e[p] - e[i]);
    for (std::size_t p = i + 1; p < count; ++p) eliminate.push_back(e[p] - e[i]);
    for (std::size_t m = 1; eliminate.size() + 1 < n; ++m)
      eliminate.push_back(e[count - 1] + tail_gap * Real(m) - e[i]);
    return eliminate;
  };
  auto estimate = [&](std::size_t i) {
    std::vector<Complex> seq(n);
    for (std::size_t j = 0; j < n; ++j) seq[j] = residual[j] / std::pow(samples[j].t, e[i]);
    const TableChoice choice = richardson(seq, ratio, eliminations(i));
    Real spread = 0;
    // Smallest magnitude this slot could be resolved against, from the raw data.
    Real resolution = std::numeric_limits<Real>::infinity();
    for (std::size_t j = 0; j < n; ++j) {
      spread = std::max(spread, std::abs(seq[j] - seq.back()));
      resolution = std::min(resolution, std::abs(samples[j].value) / std::pow(samples[j].t, e[i]));
    }
    const bool at_data_floor = choice.error <= kResolvableFraction * resolution;
    if (spread > 0 && choice.error > Real(0.1) * spread && !at_data_floor)
      throw NoiseFloorError("Richardson levels stopped contracting at ladder slot " + std::to_string(i));
    if (choice.amplification > options.max_condition)
      throw IllConditionedError("extrapolation amplification exceeds the conditioning limit");
    return choice;
  };
  auto shift = [&](std::size_t i, Complex amount) {
    for (std::size_t j = 0; j < n; ++j) residual[j] -= amount * std::pow(samples[j].t, e[i]);
  };

  // Peel from the lowest exponent upwards.
  for (std::size_t i = 0; i < count; ++i) {
    const TableChoice choice = estimate(i);
    fit.coefficients.push_back(choice.value);
    fit.coefficient_errors.push_back(choice.error);
    fit.condition_estimate = std::max(fit.condition_estimate, choice.amplification);
    shift(i, choice.value);
  }
  Real worst = 0;
  for (const Complex& r : residual) worst = std::max(worst, std::abs(r));
  fit.residual_norm = scale > 0 ? worst / scale : 0;
  return fit;
}

std::vector<Complex> fit_polynomial(const std::vector<std::pair<Complex, Complex>>& samples, std::size_t degree) {
  const std::size_t n = samples.size();
  if (n < degree + 1) throw DegenerateNodesError("not enough nodes for the requested degree");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Real size = std::max<Real>(1, std::max(std::abs(samples[i].first), std::abs(samples[j].first)));
      if (std::abs(samples[i].first - samples[j].first) <= 1e-14L * size)
        throw DegenerateNodesError("coincident interpolation nodes");
    }
  CMatrix a(n, degree + 1);
  CVector b(n);
  for (std::size_t i = 0; i < n; ++i) {
    Complex p = 1;
    for (std::size_t j = 0; j <= degree; ++j) {
      a(i, j) = p;
      p *= samples[i].first;
    }
    b(i) = samples[i].second;
  }
  CVector c = a.colPivHouseholderQr().solve(b);
  return std::vector<Complex>(c.data(), c.data() + c.size());
}

std::vector<Real> chebyshev_nodes(std::size_t count, Real radius) {
  std::vector<Real> z(count);
  for (std::size_t j = 0; j < count; ++j) z[j] = radius * std::cos((2 * Real(j) + 1) * kPi / (2 * Real(count)));
  return z;
}

XiFit xi_constant_term(const std::vector<std::pair<Real, Complex>>& samples, std::size_t degree_cap) {
  const std::size_t n = samples.size();
  if (n < degree_cap + 1) throw DegenerateNodesError("not enough xi nodes for the degree cap");
  Real xi_max = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!(samples[i].first > 1)) throw DomainError("xi nodes must exceed 1");
    xi_max = std::max(xi_max, samples[i].first);
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::fabs(samples[i].first - samples[j].first) <= 1e-14L * samples[i].first)
        throw DegenerateNodesError("coincident xi nodes");
  }
  const std::size_t terms = degree_cap / 2 + 1;
  // Columns in u = (xi / xi_max)^2 keep the matrix well scaled; the constant term is unchanged.
  CMatrix a(n, terms);
  CVector b(n);
  Real scale = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Real u = (samples[i].first / xi_max) * (samples[i].first / xi_max);
    Real p = 1;
    for (std::size_t j = 0; j < terms; ++j) {
      a(i, j) = p;
      p *= u;
    }
    b(i) = samples[i].second;
    scale = std::max(scale, std::abs(samples[i].second));
  }
  Eigen::JacobiSVD<CMatrix> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  CVector c = svd.solve(b);
  const auto& sv = svd.singularValues();

  XiFit fit;
  fit.constant = c(0);
  fit.condition_estimate = sv(sv.size() - 1) > 0 ? sv(0) / sv(sv.size() - 1) : std::numeric_limits<Real>::infinity();
  Real u_scale = 1;
  for (std::size_t j = 0; j < terms; ++j) {
    fit.coefficients.push_back(c(j) / u_scale);
    u_scale *= xi_max * xi_max;
  }
  CVector r = a * c - b;
  fit.residual_norm = scale > 0 ? r.cwiseAbs().maxCoeff() / scale : 0;
  return fit;
}

}  // namespace hlab
