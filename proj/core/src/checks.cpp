#include "hlab/checks.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <sstream>

#include "hlab/combinatorics.hpp"
#include "hlab/errors.hpp"
#include "hlab/mellin.hpp"
#include "hlab/special_functions.hpp"
#include "hlab/transport.hpp"

namespace hlab {

namespace {

std::string num(Real v) {
  std::ostringstream os;
  os.precision(17);
  os << static_cast<double>(v);
  return os.str();
}

Real relative(Complex a, Complex b) {
  const Real scale = std::max(std::abs(a), std::abs(b));
  return scale > 0 ? std::abs(a - b) / scale : 0;
}

}  // namespace

ExtractionReport mellin_check(const SmoothProfile& odd_f, const SmoothProfile& even_h, const MellinCheckOptions& options) {
  ExtractionReport report;
  report.pipeline = "mellin-check";
  report.provenance = "scaling law, integration by parts, and M' at integers";
  report.configuration = {{"scales", std::to_string(options.scales.size())},
                          {"real_parts", std::to_string(options.real_parts.size())},
                          {"imaginary_parts", std::to_string(options.imaginary_parts.size())},
                          {"integer_range", std::to_string(options.integer_min) + ".." + std::to_string(options.integer_max)}};
  report.sample_columns = {"profile", "alpha_re", "alpha_im", "s", "scaling_error", "ibp_error"};

  Real max_scaling = 0;
  Real max_ibp = 0;
  const std::vector<const SmoothProfile*> profiles = {&odd_f, &even_h};
  for (std::size_t pi = 0; pi < profiles.size(); ++pi) {
    const SmoothProfile& h = *profiles[pi];
    const SmoothProfile dh = derivative_profile(h);
    for (Real re : options.real_parts) {
      for (Real im : options.imaginary_parts) {
        const Complex alpha(re, im);
        const MellinValue base = mellin(h, alpha);
        const Complex ibp = -mellin(dh, alpha + Real(1)).value / alpha;
        const Real ibp_error = relative(base.value, ibp);
        max_ibp = std::max(max_ibp, ibp_error);
        for (Real s : options.scales) {
          const Complex scaled = mellin(dilated(h, s), alpha).value;
          const Complex expected = std::exp(alpha * std::log(s)) * base.value;
          const Real err = relative(scaled, expected);
          max_scaling = std::max(max_scaling, err);
          report.sample_rows.push_back({Real(pi), re, im, s, err, ibp_error});
        }
      }
    }
  }

  std::size_t nonfinite = 0;
  for (int n = options.integer_min; n <= options.integer_max; ++n) {
    Complex v;
    try {
      v = mellin_prime(odd_f, Complex(Real(n)));
    } catch (const PoleError&) {
      ++nonfinite;
      continue;
    }
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) ++nonfinite;
    report.metrics["mellin_prime_at_" + std::to_string(n)] = v.real();
  }
  report.metrics["max_scaling_error"] = max_scaling;
  report.metrics["max_ibp_error"] = max_ibp;
  report.metrics["nonfinite_prime_count"] = Real(nonfinite);
  return report;
}

ExtractionReport msexp_check(const SmoothProfile& h, const OddTestFunction& f, const MsExpOptions& options) {
  ExtractionReport report;
  report.pipeline = "msexp-check";
  report.provenance = "s-expansion of M'((h f_s)_odd)";
  report.configuration = {{"alpha", num(options.alpha)},
                          {"terms", std::to_string(options.terms)},
                          {"s_grid", num(options.s_grid.t0) + " * " + num(options.s_grid.ratio) + "^j, j < " +
                                         std::to_string(options.s_grid.count)}};
  report.sample_columns = {"s", "value_re", "value_im"};

  const std::vector<Real> s = geometric_grid(options.s_grid.t0, options.s_grid.ratio, options.s_grid.count);
  std::vector<LadderSample> samples;
  for (Real sj : s) {
    const SmoothProfile g = odd_part(product(h, dilated(f.profile(), sj)));
    const Complex v = mellin_prime(g, Complex(options.alpha));
    samples.push_back({sj, v});
    report.sample_rows.push_back({sj, v.real(), v.imag()});
  }
  const ExponentLadder ladder = ExponentLadder::arithmetic(options.alpha, 2, options.terms + options.extra_slots);
  const AsymptoticFit fit = fit_ladder(samples, ladder);
  report.diagnostics.push_back({"[[s^p]]", fit.residual_norm, fit.condition_estimate, fit.coefficient_errors});

  const Rational alpha_q(static_cast<long long>(std::llround(options.alpha * 1000000)), 1000000LL);
  for (std::size_t k = 0; k < options.terms; ++k) {
    const Real hk = h.derivative(2 * k, 0);
    const Real mp = mellin_prime(f.profile(), Complex(options.alpha + 2 * Real(k))).real();
    const Real predicted = to_real(msexp_coeff(static_cast<int>(k), alpha_q)) * hk * mp;
    report.add_entry("s^" + num(options.alpha + 2 * Real(k)), static_cast<int>(k), fit.coefficients[k], predicted);
  }
  return report;
}

std::vector<Point> transport_check_points(std::size_t d) {
  // Timelike and spacelike targets inside the unit box around the origin.
  std::vector<Point> pts;
  Point a(d, 0), b(d, 0), c(d, 0);
  a[0] = 0.6L;
  a[1] = 0.2L;
  b[0] = -0.4L;
  b[1] = 0.3L;
  c[0] = 0.25L;
  c[1] = -0.5L;
  if (d > 2) {
    a[2] = -0.1L;
    b[2] = 0.15L;
    c[2] = 0.2L;
  }
  pts = {a, b, c};
  return pts;
}

ExtractionReport transport_check(const TransportCheckOptions& options) {
  ExtractionReport report;
  report.pipeline = "transport-check";
  report.provenance = "transport solution of P - z against binomial recombination";
  report.convention = calibrated_convention();
  std::ostringstream dims, zs;
  for (std::size_t d : options.dimensions) dims << d << " ";
  for (const Complex& z : options.z_grid) zs << num(z.real()) << "+" << num(z.imag()) << "i ";
  report.configuration = {{"potential", "gaussian"},
                          {"amplitude", num(options.amplitude)},
                          {"width", num(options.width)},
                          {"dimensions", dims.str()},
                          {"k_max", std::to_string(options.k_max)},
                          {"z_grid", zs.str()},
                          {"fd_step", num(options.fd_step)}};
  report.sample_columns = {"d", "z_re", "z_im", "k", "point", "direct_re", "direct_im", "recombined_re",
                           "recombined_im", "relative_error"};

  Real max_shift_error = 0;
  Real max_residual = 0;
  for (std::size_t d : options.dimensions) {
    Point x(d, 0);
    // Center off the base point so the potential has no symmetry about x.
    Point center(d, 0);
    center[0] = 0.3L;
    center[1] = -0.2L;
    auto potential = std::make_shared<GaussianPotential>(options.amplitude, options.width, center);
    SpacetimeModel model{MinkowskiSpace(d), potential, 0, 3};
    const std::vector<Point> pts = transport_check_points(d);
    const HadamardTable base = [&] {
      TransportSolver solver(model, x, options.k_max, options.fd_step);
      HadamardTable t{x, options.k_max, pts, std::vector<std::vector<Complex>>(options.k_max + 1)};
      for (std::size_t k = 0; k <= options.k_max; ++k)
        for (const Point& p : pts) t.values[k].push_back(solver.value(k, p));
      return t;
    }();
    for (const Complex& z : options.z_grid) {
      TransportSolver shifted(model.shifted_by(z), x, options.k_max, options.fd_step);
      const HadamardTable recombined = shift_coefficients(base, z);
      for (std::size_t k = 0; k <= options.k_max; ++k) {
        for (std::size_t i = 0; i < pts.size(); ++i) {
          const Complex direct = shifted.value(k, pts[i]);
          const Complex rec = recombined.values[k][i];
          const Real err = relative(direct, rec);
          max_shift_error = std::max(max_shift_error, err);
          report.sample_rows.push_back({Real(d), z.real(), z.imag(), Real(k), Real(i), direct.real(), direct.imag(),
                                        rec.real(), rec.imag(), err});
        }
      }
    }
    TransportSolver solver(model, x, options.k_max, options.fd_step);
    for (std::size_t k = 1; k <= options.k_max; ++k) {
      const Real r = ray_transport_residual(solver, k, pts[0], options.residual_samples);
      max_residual = std::max(max_residual, r);
      report.metrics["transport_residual_d" + std::to_string(d) + "_k" + std::to_string(k)] = r;
    }
  }
  report.metrics["max_shift_error"] = max_shift_error;
  report.metrics["max_transport_residual"] = max_residual;
  return report;
}

}  // namespace hlab
