#include "hlab/mellin.hpp"

#include <cmath>
#include <cstddef>
#include <limits>

#include "hlab/errors.hpp"
#include "hlab/quadrature.hpp"
#include "hlab/special_functions.hpp"

namespace hlab {

namespace {

// Tail dropped by the graded rule is below 2^(-levels * Re beta).
constexpr Real kGradedExponent = 64;
constexpr Real kRoundoff = 1e-19L;
constexpr int kSplitCandidates = 8;
constexpr Real kSplitAcceptance = 1e-9L;
constexpr Real kSplitFloor = 1e-30L;

bool is_integer(Real x) { return std::floor(x) == x; }

// int_0^R h(t) t^(beta-1) dt for Re beta >= 1.
Complex base_integral(const SmoothProfile& h, Complex beta) {
  const Real radius = h.support_radius();
  auto g = [&h](Real t) { return h.jet(t, 0)[0]; };
  if (beta.imag() == 0 && is_integer(beta.real())) {
    const Real p = beta.real() - 1;
    return integrate(std::function<Real(Real)>([&](Real t) { return g(t) * std::pow(t, p); }), 0, radius);
  }
  const Complex p = beta - Real(1);
  std::function<Complex(Real)> integrand = [&](Real t) { return g(t) * std::exp(p * std::log(t)); };
  unsigned levels = static_cast<unsigned>(std::ceil(kGradedExponent / beta.real()));
  return integrate_graded(integrand, 0, radius, levels);
}

// Continuation through the Taylor series at 0: on [0, t0] the series is
// integrated term by term, which is exact for every alpha away from the poles,
// and [t0, R] is an ordinary integral. The j = skip term is left out; it is
// the pole term at alpha = -skip.
struct SeriesSplit {
  Complex head;
  Real t0 = 0;
  Real error = 0;
};

SeriesSplit series_head(const Jet& c, std::size_t order, Complex alpha, Real t0, std::ptrdiff_t skip) {
  SeriesSplit out;
  out.t0 = t0;
  Real magnitude = 0;
  Real tail = 0;
  const Real log_t0 = std::log(t0);
  for (std::size_t j = 0; j <= order; ++j) {
    if (static_cast<std::ptrdiff_t>(j) == skip || c[j] == 0) continue;
    const Complex e = alpha + Real(j);
    const Complex term = c[j] * std::exp(e * log_t0) / e;
    out.head += term;
    magnitude += std::abs(term);
    if (j + 2 > order) tail += std::abs(term) * t0;
  }
  out.error = tail + magnitude * kRoundoff;
  return out;
}

Complex split_continuation(const SmoothProfile& h, Complex alpha, std::ptrdiff_t skip) {
  const std::size_t order = h.max_order();
  const Jet c = h.jet(0, order);
  SeriesSplit best;
  best.error = std::numeric_limits<Real>::infinity();
  Real t0 = h.support_radius();
  for (int m = 0; m < kSplitCandidates; ++m) {
    t0 /= 2;
    SeriesSplit candidate = series_head(c, order, alpha, t0, skip);
    if (candidate.error < best.error) best = candidate;
  }
  const Complex p = alpha - Real(1);
  std::function<Complex(Real)> integrand = [&h, p](Real t) { return h.jet(t, 0)[0] * std::exp(p * std::log(t)); };
  const Complex value = best.head + integrate(integrand, best.t0, h.support_radius());
  if (best.error > kSplitAcceptance * std::max(std::abs(value), kSplitFloor)) {
    throw PrecisionError("Taylor series at 0 too short for the Mellin continuation");
  }
  return value;
}

}  // namespace

MellinValue mellin(const SmoothProfile& h, Complex alpha) {
  if (!h.compact()) throw DomainError("Mellin transform needs a compactly supported profile");
  MellinValue out;
  out.argument = alpha;

  if (is_nonpositive_integer(alpha)) {
    const auto k = static_cast<std::size_t>(-alpha.real());
    if (k > h.max_order()) throw PrecisionError("continuation depth exceeds the profile's derivative order");
    const Real residue = h.jet(0, k)[k];
    if (residue != 0) {
      out.is_pole = true;
      out.residue = residue;
      return out;
    }
    // Removable point: the j = k series term carries the factor residue = 0.
    out.value = split_continuation(h, alpha, static_cast<std::ptrdiff_t>(k));
    return out;
  }

  if (alpha.real() >= 1) {
    out.value = base_integral(h, alpha);
  } else {
    out.value = split_continuation(h, alpha, -1);
  }
  return out;
}

Complex mellin_prime(const SmoothProfile& h, Complex alpha) {
  MellinValue m = mellin(h, alpha);
  if (is_nonpositive_integer(alpha)) {
    const auto k = static_cast<std::uint32_t>(-alpha.real());
    if (k % 2 == 1) {
      if (!m.is_pole) return 0;
      // 1/Gamma((a+1)/2) ~ (-1)^j j! (a + k) / 2 near a = -k, j = (k-1)/2
      const std::uint32_t j = (k - 1) / 2;
      const Real sign = (j % 2 == 0) ? 1 : -1;
      return m.residue * sign * factorial(j) / Real(2);
    }
    if (m.is_pole) throw PoleError("M'(h) has an uncancelled pole at an even non-positive integer");
  }
  return m.value * reciprocal_gamma((alpha + Real(1)) / Real(2));
}

Complex mellin_over_gamma(const SmoothProfile& h, Complex beta) {
  MellinValue m = mellin(h, beta);
  if (is_nonpositive_integer(beta)) {
    if (!m.is_pole) return 0;
    const auto k = static_cast<std::uint32_t>(-beta.real());
    const Real sign = (k % 2 == 0) ? 1 : -1;
    return m.residue * sign * factorial(k);
  }
  return m.value * reciprocal_gamma(beta);
}

}  // namespace hlab
