#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "hlab/asymptotic_fit.hpp"
#include "hlab/curve.hpp"
#include "hlab/greens.hpp"
#include "hlab/smooth_profile.hpp"
#include "hlab/types.hpp"

namespace hlab {

/// Sample values are either kept in extended precision or rounded to
/// binary64 before any fitting.
enum class SamplePrecision { extended, double_rounded };

SamplePrecision precision_from_string(const std::string& name);
std::string to_string(SamplePrecision p);

struct GeometricGrid {
  Real t0 = 0.4L;
  Real ratio = 0.75L;
  std::size_t count = 24;
};

/// Fit diagnostics of one bracket application.
struct BracketDiagnostics {
  std::string bracket;
  Real residual_norm = 0;
  Real condition_estimate = 1;
  std::vector<Real> coefficient_errors;
};

struct ReportEntry {
  std::string label;
  int k = 0;
  Complex recovered;
  Complex reference;
  /// Relative error, or absolute error when the reference vanishes.
  Real error = 0;
  bool relative = true;
};

struct ExtractionReport {
  std::string pipeline;
  std::string provenance;
  std::string convention;
  std::vector<ReportEntry> entries;
  std::vector<BracketDiagnostics> diagnostics;
  std::map<std::string, Real> metrics;
  std::map<std::string, std::string> configuration;
  std::vector<std::string> sample_columns;
  std::vector<std::vector<Real>> sample_rows;

  void add_entry(std::string label, int k, Complex recovered, Complex reference);
  std::map<int, Complex> recovered() const;
  std::map<int, Complex> reference() const;
  Real max_error() const;
};

/// Statement of the mass/shift sign convention carried by every report.
std::string calibrated_convention();

struct DiagonalOptions {
  std::size_t k_max = 2;
  int offset = 0;
  GeometricGrid s_grid;
  std::size_t z_nodes = 6;
  Real z_radius = 0.5L;
  std::size_t z_degree = 5;
  /// Ladder slots fitted beyond the reported ones.
  std::size_t extra_slots = 3;
  SamplePrecision precision = SamplePrecision::extended;
};

/// V^k_x(x) for k <= k_max from the z-family of pairings L(s, z) along a
/// unit-speed straight line.
ExtractionReport extract_diagonal_zfamily(const GreensFamily& fam, const TimelikeCurve& w, const OddTestFunction& f,
                                          const DiagonalOptions& options);

/// Same numbers, with L_{k,m} read as brackets of powers of the Green's operator.
ExtractionReport extract_diagonal_powers(const GreensFamily& fam, const TimelikeCurve& w, const OddTestFunction& f,
                                         const DiagonalOptions& options);

/// 6 V^1_x(x) in d = 4 via the single-term offset o = 0.
ExtractionReport scalar_curvature_d4(const GreensFamily& fam, const TimelikeCurve& w, const OddTestFunction& f,
                                     const DiagonalOptions& options);

struct ProductOptions {
  std::size_t k_max = 2;
  GeometricGrid s_grid;
  std::vector<Real> xi_grid = {1.05L, 1.1L, 1.15L, 1.2L, 1.25L, 1.3L, 1.35L, 1.4L, 1.45L, 1.5L};
  /// Second grid used to measure stability of the xi^0 term (empty: skip).
  std::vector<Real> refined_xi_grid;
  std::size_t extra_slots = 3;
  SamplePrecision precision = SamplePrecision::extended;
};

std::vector<Real> xi_grid(Real first, Real last, Real step);

/// V^k_x(x) from pairings along the lifted curves w_xi in dimension d + 1.
ExtractionReport extract_diagonal_product(const GreensFamily& fam, const TimelikeCurve& w, const OddTestFunction& f,
                                          const ProductOptions& options);

struct OffdiagonalOptions {
  std::size_t k_max = 2;
  /// eps_0 = eps0_fraction * Gamma_x(y)
  Real eps0_fraction = 0.5L;
  Real eps_ratio = 0.7L;
  std::size_t eps_count = 16;
  std::size_t extra_slots = 3;
  SamplePrecision precision = SamplePrecision::extended;
};

/// V^k_x(y) for y timelike to x from the restricted lifted Green's operator.
ExtractionReport extract_offdiagonal(const GreensFamily& fam, const Point& x, const Point& y,
                                     const CutoffFunction& chi, const OffdiagonalOptions& options);

struct IntexpOptions {
  std::size_t slots = 3;
  GeometricGrid s_grid;
  std::size_t extra_slots = 4;
  /// Central finite-difference stencil for the nu derivatives.
  std::size_t fd_half_width = 8;
  Real fd_step = 0.05L;
  SamplePrecision precision = SamplePrecision::extended;
};

/// Fitted s-ladder of L(s) against sum_{k+n=j} a(k,n) mu^k (nu^(k-d/2+1))^(2n)(0).
ExtractionReport intexp_forward_check(const GreensFamily& fam, const TimelikeCurve& w, const OddTestFunction& f,
                                      const IntexpOptions& options);

/// Weights of the n-th derivative at 0 on the nodes offsets[i].
std::vector<Real> finite_difference_weights(const std::vector<Real>& offsets, std::size_t derivative);

}  // namespace hlab
