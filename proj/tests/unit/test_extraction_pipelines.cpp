#include <doctest.h>

#include <cmath>

#include "hlab/checks.hpp"
#include "hlab/curve.hpp"
#include "hlab/errors.hpp"
#include "hlab/greens.hpp"
#include "hlab/pipelines.hpp"
#include "hlab/smooth_profile.hpp"
#include "test_support.hpp"

using namespace hlab;
using hlab::test::rel_error;

namespace {

constexpr Real kMu = 0.2L;

TimelikeCurve line(std::size_t d) {
  Point u(d, 0);
  u[0] = 1;
  return TimelikeCurve::straight_line(Point(d, 0), u);
}

GreensFamily family(std::size_t d, Real mass) {
  GreensFamily fam;
  fam.dimension = d;
  fam.mass = mass;
  return fam;
}

DiagonalOptions diagonal_options(int offset) {
  DiagonalOptions o;
  o.offset = offset;
  o.s_grid.t0 = 1.6L;
  return o;
}

void check_powers(const ExtractionReport& report, Real mu, Real tolerance) {
  REQUIRE(report.entries.size() == 3);
  for (const ReportEntry& e : report.entries) {
    CHECK(rel_error(e.reference, std::pow(mu, Real(e.k))) < 1e-14L);
    CHECK(e.error <= tolerance);
  }
}

}  // namespace

TEST_SUITE("extraction_pipelines") {
  TEST_CASE("finite difference weights") {
    const std::vector<Real> nodes{-2, -1, 0, 1, 2};
    const std::vector<Real> w2 = finite_difference_weights(nodes, 2);
    Real on_square = 0, on_quartic = 0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      on_square += w2[i] * nodes[i] * nodes[i];
      on_quartic += w2[i] * std::pow(nodes[i], 4);
    }
    CHECK(std::fabs(on_square - 2) < 1e-16L);
    CHECK(std::fabs(on_quartic) < 1e-15L);
  }

  TEST_CASE("precision names") {
    CHECK(precision_from_string("double") == SamplePrecision::double_rounded);
    CHECK(precision_from_string("extended") == SamplePrecision::extended);
    CHECK(to_string(SamplePrecision::extended) == "extended");
    CHECK_THROWS_AS(precision_from_string("quad"), ConfigError);
    CHECK(xi_grid(1.05L, 1.5L, 0.05L).size() == 10);
  }

  TEST_CASE("diagonal z-family in two dimensions") {
    const ExtractionReport report =
        extract_diagonal_zfamily(family(2, kMu), line(2), OddTestFunction::standard(), diagonal_options(0));
    check_powers(report, kMu, 1e-2L);
    CHECK_FALSE(report.diagnostics.empty());
    CHECK_FALSE(report.convention.empty());
    CHECK(report.sample_columns == std::vector<std::string>{"s", "z_re", "z_im", "value_re", "value_im"});
  }

  TEST_CASE("diagonal z-family for the free four-dimensional operator") {
    const ExtractionReport report =
        extract_diagonal_zfamily(family(4, 0), line(4), OddTestFunction::standard(), diagonal_options(0));
    REQUIRE(report.entries.size() == 3);
    CHECK(std::abs(report.entries[0].recovered - Real(1)) < 1e-2L);
    CHECK(std::abs(report.entries[1].recovered) < 1e-2L);
    CHECK(std::abs(report.entries[2].recovered) < 1e-2L);
  }

  TEST_CASE("offsets agree for the single-term case") {
    const OddTestFunction f = OddTestFunction::standard();
    const ExtractionReport o0 = extract_diagonal_zfamily(family(4, kMu), line(4), f, diagonal_options(0));
    const ExtractionReport o1 = extract_diagonal_zfamily(family(4, kMu), line(4), f, diagonal_options(1));
    check_powers(o1, kMu, 1e-2L);
    CHECK(rel_error(o1.entries[1].recovered, o0.entries[1].recovered) < 1e-3L);
  }

  TEST_CASE("powers of the Green's operator give the same numbers") {
    const OddTestFunction f = OddTestFunction::standard();
    const ExtractionReport z = extract_diagonal_zfamily(family(2, kMu), line(2), f, diagonal_options(0));
    const ExtractionReport p = extract_diagonal_powers(family(2, kMu), line(2), f, diagonal_options(0));
    REQUIRE(z.entries.size() == p.entries.size());
    for (std::size_t i = 0; i < z.entries.size(); ++i)
      CHECK(std::abs(z.entries[i].recovered - p.entries[i].recovered) <= 1e-12L);
    CHECK(p.provenance != z.provenance);
  }

  TEST_CASE("z-family needs a unit-speed straight line") {
    CHECK_THROWS_AS(extract_diagonal_zfamily(family(2, kMu), TimelikeCurve::hyperbolic(Point(2, 0)),
                                             OddTestFunction::standard(), diagonal_options(0)),
                    DomainError);
    CHECK_THROWS_AS(
        extract_diagonal_zfamily(family(4, kMu), line(2), OddTestFunction::standard(), diagonal_options(0)),
        DomainError);
  }

  TEST_CASE("scalar curvature in four dimensions") {
    const OddTestFunction f = OddTestFunction::standard();
    DiagonalOptions options = diagonal_options(0);
    options.s_grid.t0 = 0.4L;
    const ExtractionReport flat = scalar_curvature_d4(family(4, 0), line(4), f, options);
    REQUIRE(flat.entries.size() == 1);
    CHECK(std::abs(flat.entries[0].recovered) < 5e-3L);
    const ExtractionReport massive = scalar_curvature_d4(family(4, kMu), line(4), f, options);
    options.k_max = 1;
    const ExtractionReport diagonal = extract_diagonal_zfamily(family(4, kMu), line(4), f, options);
    CHECK(std::abs(massive.entries[0].recovered - Real(6) * diagonal.entries[1].recovered) <= 1e-15L);
    CHECK(rel_error(massive.entries[0].recovered, 6 * kMu) < 1e-2L);
    CHECK_THROWS_AS(scalar_curvature_d4(family(2, 0), line(2), f, options), DomainError);
  }

  TEST_CASE("off-diagonal extraction on both branches") {
    const CutoffFunction chi = CutoffFunction::standard();
    for (const Point& y : {Point{1, 0.3L}, Point{-1, 0.3L}}) {
      const ExtractionReport report = extract_offdiagonal(family(2, kMu), {0, 0}, y, chi, OffdiagonalOptions{});
      check_powers(report, kMu, 1e-2L);
      CHECK(report.entries[0].error < 1e-3L);
      CHECK(report.metrics.at("eps_ladder_residual") < 1e-6L);
    }
    CHECK_THROWS_AS(extract_offdiagonal(family(2, kMu), {0, 0}, {0.2L, 1}, chi, OffdiagonalOptions{}), DomainError);
  }

  TEST_CASE("product extraction along an accelerated curve") {
    ProductOptions options;
    const ExtractionReport report = extract_diagonal_product(family(2, kMu), TimelikeCurve::hyperbolic(Point(2, 0)),
                                                             OddTestFunction::standard(), options);
    check_powers(report, kMu, 2e-2L);
    CHECK(report.entries[0].error < 1e-3L);
  }

  TEST_CASE("forward expansion along both curve types") {
    const OddTestFunction f = OddTestFunction::standard();
    for (const TimelikeCurve& w : {line(2), TimelikeCurve::hyperbolic(Point(2, 0))}) {
      const ExtractionReport report = intexp_forward_check(family(2, kMu), w, f, IntexpOptions{});
      REQUIRE(report.entries.size() == 3);
      for (const ReportEntry& e : report.entries) CHECK(e.error <= 1e-4L);
    }
  }

  TEST_CASE("Mellin and expansion checks") {
    const ExtractionReport mellin = mellin_check(odd_bump_profile(), bump_profile(), MellinCheckOptions{});
    CHECK(mellin.metrics.at("max_scaling_error") <= 1e-10L);
    CHECK(mellin.metrics.at("max_ibp_error") <= 1e-10L);
    CHECK(mellin.metrics.at("nonfinite_prime_count") == 0);
    const ExtractionReport msexp = msexp_check(cosine_profile(), OddTestFunction::standard(), MsExpOptions{});
    REQUIRE(msexp.entries.size() == 4);
    for (const ReportEntry& e : msexp.entries) CHECK(e.error <= 1e-6L);
  }
}
