#include "hlab/greens.hpp"

#include <algorithm>
#include <cmath>

#include "hlab/errors.hpp"
#include "hlab/mellin.hpp"
#include "hlab/quadrature.hpp"
#include "hlab/riesz.hpp"
#include "hlab/special_functions.hpp"

namespace hlab {

namespace {

// Sup of Gamma_x(w(t)) over the support of g.
Real max_big_gamma(const TimelikeCurve& w, Real radius) {
  Real worst = 0;
  constexpr int kPoints = 200;
  for (int i = -kPoints; i <= kPoints; ++i) {
    const Real t = radius * Real(i) / kPoints;
    worst = std::max(worst, std::fabs(w.big_gamma_jet(t, 0).value()));
  }
  return worst * Real(1.05);
}

Real l1_norm(const SmoothProfile& g) {
  const Real r = g.support_radius();
  return integrate(std::function<Real(Real)>([&g](Real t) { return std::fabs(g(t)); }), -r, r);
}

// |c_{2k+2}| in dimension d.
Real abs_c_even(std::size_t k, Real d) {
  return std::pow(Real(2), -1 - 2 * Real(k)) * std::pow(kPi, (2 - d) / 2) / factorial(static_cast<std::uint32_t>(k)) *
         std::abs(reciprocal_gamma(Complex(Real(k) + 2 - d / 2)));
}

}  // namespace

GreensFamily GreensFamily::lifted() const {
  GreensFamily out = *this;
  out.dimension += 1;
  return out;
}

RieszSeriesPairing::RieszSeriesPairing(const GreensFamily& family, const TimelikeCurve& w, const SmoothProfile& g,
                                       Real max_shift)
    : max_shift_(max_shift) {
  if (!g.compact()) throw DomainError("pairing profile must be compactly supported");
  if (g.support_radius() > w.half_width()) throw DomainError("profile support exceeds the curve domain");
  if (w.dimension() != family.dimension) throw DomainError("curve and family dimensions differ");
  const Real d = Real(family.dimension);
  const Real gmax = max_big_gamma(w, g.support_radius());
  const Real mass_l1 = l1_norm(g);

  // Function-regime bound |T_k| <= |c_{2k+2}| Gmax^(k+1-d/2) |g|_1 for 2k+2 > d.
  auto term_bound = [&](std::size_t k) {
    return std::pow(max_shift, Real(k)) * abs_c_even(k, d) * std::pow(gmax, Real(k) + 1 - d / 2) * mass_l1;
  };

  Real largest = 0;
  for (std::size_t k = 0;; ++k) {
    if (k > family.max_truncation) throw TruncationError("Riesz series tail bound not met within the truncation cap");
    terms_.push_back(paired_riesz_along_curve(Complex(2 * Real(k) + 2), w, g));
    largest = std::max(largest, std::abs(terms_.back()) * std::pow(max_shift, Real(k)));
    const std::size_t next = k + 1;
    if (2 * Real(next) + 2 <= d || k < family.min_truncation) continue;
    // Successive bound ratios decrease, so a geometric tail from `next` is an upper bound.
    const Real first = term_bound(next);
    const Real ratio = max_shift * gmax / (4 * Real(next + 1) * (Real(next) + 2 - d / 2));
    if (ratio >= 1) continue;
    tail_bound_ = first / (1 - ratio);
    // An identically vanishing series (even g) is measured against the bound scale instead.
    const Real reference = largest > 0 ? largest : term_bound(0) + mass_l1;
    if (tail_bound_ <= family.relative_tail * reference) break;
  }
}

Complex RieszSeriesPairing::evaluate(Complex shift) const {
  if (std::abs(shift) > max_shift_ * (1 + 1e-12L))
    throw DomainError("shift outside the range the series truncation was chosen for");
  Complex total = 0;
  for (std::size_t k = terms_.size(); k-- > 0;) total = total * shift + terms_[k];
  return total;
}

Complex pair_greens_along_curve(const GreensFamily& fam, Complex z, const TimelikeCurve& w, const SmoothProfile& g) {
  const Complex shift = Complex(fam.mass) + z;
  RieszSeriesPairing series(fam, w, g, std::abs(shift));
  return series.evaluate(shift);
}

Complex product_pair_greens(const GreensFamily& fam, Complex z, const TimelikeCurve& lifted_curve,
                            const SmoothProfile& g) {
  return pair_greens_along_curve(fam.lifted(), z, lifted_curve, g);
}

Complex offdiag_term(std::size_t d, std::size_t k, Real eps, const SmoothProfile& chi) {
  const Real beta = Real(k) + (3 - Real(d)) / 2;
  return std::pow(Real(2), -1 - 2 * Real(k)) * std::pow(kPi, (1 - Real(d)) / 2) /
         factorial(static_cast<std::uint32_t>(k)) * mellin_over_gamma(chi, Complex(beta)) * std::pow(eps, beta);
}

Complex offdiag_pair_greens(const GreensFamily& fam, Complex z, const Point& x, const Point& y, Real eps,
                            const SmoothProfile& chi, Branch branch) {
  if (x.size() != fam.dimension || y.size() != fam.dimension) throw DomainError("point dimension mismatch");
  const Real gxy = big_gamma(x, y);
  if (!(gxy > 0)) throw DomainError("off-diagonal point must be timelike to the base point");
  if (!(eps > 0 && eps < gxy)) throw DomainError("cutoff width must satisfy 0 < eps < Gamma_x(y)");
  if (!chi.compact() || chi.support_radius() > 1) throw DomainError("cutoff must be supported in (-1, 1)");
  if (timelike_branch(x, y) != branch) return 0;

  const Complex shift = Complex(fam.mass) + z;
  const Real a = std::abs(shift);
  const Real d = Real(fam.dimension);
  // |(M(chi)/Gamma)(b)| <= sup|chi| / Gamma(b + 1) for b > 0, chi supported in (-1, 1).
  Real sup_chi = 0;
  for (int i = 0; i <= 200; ++i) sup_chi = std::max(sup_chi, std::fabs(chi(Real(i) / 200)));

  Complex total = 0;
  Complex shift_power = 1;
  Real largest = 0;
  for (std::size_t k = 0;; ++k) {
    if (k > fam.max_truncation) throw TruncationError("off-diagonal series tail bound not met");
    if (k > 0) shift_power *= shift;
    const Complex term = offdiag_term(fam.dimension, k, eps, chi) * shift_power;
    total += term;
    largest = std::max(largest, std::abs(term));
    const Real beta = Real(k + 1) + (3 - d) / 2;
    if (beta <= 0) continue;
    const Real next = std::pow(Real(2), -3 - 2 * Real(k)) * std::pow(kPi, (1 - d) / 2) /
                      factorial(static_cast<std::uint32_t>(k + 1)) * sup_chi /
                      std::tgamma(beta + 1) * std::pow(eps, beta) * std::pow(a, Real(k + 1));
    const Real ratio = a * eps / (4 * Real(k + 2) * (beta + 1));
    if (ratio >= 1) continue;
    const Real tail = next / (1 - ratio);
    if (a == 0 || tail <= fam.relative_tail * largest) break;
  }
  return total;
}

}  // namespace hlab
