#include <doctest.h>

#include <cmath>

#include "hlab/combinatorics.hpp"
#include "hlab/errors.hpp"

using namespace hlab;

namespace {

Rational r(long long num, long long den = 1) { return Rational(num, den); }

}  // namespace

TEST_SUITE("combinatorics_exact") {
  TEST_CASE("rational helpers") {
    CHECK(rational_binomial(r(-1), 3) == r(-1));
    CHECK(rational_binomial(r(1, 2), 2) == r(-1, 8));
    CHECK(rational_binomial(r(5, 3), 0) == r(1));
    CHECK(rational_binomial(r(6), 2) == r(15));
    CHECK(rational_factorial(7) == r(5040));
    CHECK(rational_power(r(-2, 3), 3) == r(-8, 27));
    CHECK(to_string(r(-3, 4)) == "-3/4");
    CHECK(std::fabs(to_real(r(1, 3)) - 1.0L / 3) < 1e-19L);
  }

  TEST_CASE("a coefficients") {
    for (int d = 2; d <= 8; ++d) {
      const ExactTerm a = a_coeff(0, 0, d);
      CHECK(a.rational == r(1));
      CHECK(a.pi_twice == 2 - d);
      CHECK(a.mellin_powers.size() == 1);
      CHECK(a.mellin_powers.at(3 - d) == 1);
    }
    CHECK(a_coeff(3, 0, 5).rational == r(1, 4 * 4 * 4 * 6));
    CHECK(a_coeff(1, 1, 4).rational == r(1, 8));
    CHECK(a_coeff(1, 1, 4).mellin_powers.at(3) == 1);
  }

  TEST_CASE("alpha matrix") {
    for (int m = 0; m <= 3; ++m) {
      const ExactTerm lhs = alpha_matrix(0, m, 0, 4);
      const ExactTerm rhs = a_coeff(m, 0, 4);
      CHECK(lhs.rational == rhs.rational);
      CHECK(lhs.mellin_powers == rhs.mellin_powers);
    }
    CHECK(alpha_matrix(2, 0, 2, 3).rational == a_coeff(2, 0, 3).rational);
    const ExactTerm a01 = alpha_matrix(1, 0, 1, 4);
    const ExactTerm a10 = alpha_matrix(1, 1, 0, 4);
    CHECK((a01.rational != a10.rational || a01.mellin_powers != a10.mellin_powers));
  }

  TEST_CASE("q coefficients at the special offsets") {
    for (int d = 2; d <= 8; d += 2)
      for (int k = 0; k <= d / 2 - 1; ++k) {
        const int o = d / 2 - 1 - k;
        for (int m = 1; m <= k; ++m) CHECK(q_coeff(k, m, o, d).rational == r(0));
        const ExactTerm q = q_coeff(k, 0, o, d);
        const ExactTerm single = q_coeff_single_term(k, d);
        CHECK(q.rational == single.rational);
        CHECK(q.pi_twice == single.pi_twice);
        CHECK(q.mellin_powers == single.mellin_powers);
        CHECK(q.mellin_powers.at(1) == -1);
      }
    for (int d = 2; d <= 8; d += 2)
      for (int k = 0; k <= 5; ++k)
        for (int m = 0; m <= k; ++m) {
          const ExactTerm q = q_coeff(k, m, d / 2 - 1, d);
          const ExactTerm closed = q_coeff_half_dimension_offset(k, m, d);
          CHECK(q.rational == closed.rational);
          CHECK(q.pi_twice == closed.pi_twice);
          CHECK(q.mellin_powers == closed.mellin_powers);
        }
  }

  TEST_CASE("leading left-inverse row is exactly one") {
    for (int d = 2; d <= 8; ++d)
      for (int o = 0; o <= 4; ++o) {
        const ExactTerm product = q_coeff(0, 0, o, d) * alpha_matrix(0, o, 0, d);
        CHECK(product.symbol_free());
        CHECK(product.pi_twice == 0);
        CHECK(product.rational == r(1));
      }
  }

  TEST_CASE("exhaustive left-inverse sweep") {
    for (int d = 2; d <= 8; ++d)
      for (int o = 0; o <= 4; ++o)
        for (int k = 0; k <= 6; ++k) {
          const LeftInverseCertificate cert = verify_left_inverse(k, o, d);
          CHECK(cert.holds);
          REQUIRE(cert.residual.size() == std::size_t(k + 1));
          for (const Rational& x : cert.residual) CHECK(x == 0);
        }
  }

  TEST_CASE("a perturbed binomial breaks the identity") {
    // binom(2k + o + 1 - d/2, k - m) replaced by binom(2k + o + 2 - d/2, k - m)
    const QFunction perturbed = [](int k, int m, int o, int d) {
      ExactTerm q = q_coeff(k, m, o, d);
      const Rational original = rational_binomial(Rational(2 * k + o + 1) - Rational(d, 2), std::uint32_t(k - m));
      if (original != 0)
        q.rational = q.rational / original * rational_binomial(Rational(2 * k + o + 2) - Rational(d, 2), std::uint32_t(k - m));
      return q;
    };
    const LeftInverseCertificate cert = verify_left_inverse(2, 0, 4, perturbed);
    CHECK_FALSE(cert.holds);
    bool nonzero = false;
    for (const Rational& x : cert.residual) nonzero = nonzero || x != 0;
    CHECK(nonzero);
  }

  TEST_CASE("misaligned Mellin symbols are detected") {
    const QFunction shifted = [](int k, int m, int o, int d) { return q_coeff(k, m, o + 1, d); };
    CHECK_THROWS_AS(verify_left_inverse(2, 0, 4, shifted), SymbolMismatchError);
  }

  TEST_CASE("msexp coefficients") {
    CHECK(msexp_coeff(0, r(3)) == r(1));
    CHECK(msexp_coeff(1, r(1)) == r(1, 2));
    CHECK(msexp_coeff(2, r(1)) == r(2, 24) * rational_binomial(r(2), 2));
    // a(k, n) = pi^((2-d)/2) 4^-k / k! msexp_coeff(n, 2k + 3 - d)
    for (int d = 2; d <= 7; ++d)
      for (int k = 0; k <= 4; ++k)
        for (int n = 0; n <= 4; ++n) {
          const Rational want =
              msexp_coeff(n, r(2 * k + 3 - d)) / (rational_power(r(4), std::uint32_t(k)) * rational_factorial(std::uint32_t(k)));
          CHECK(a_coeff(k, n, d).rational == want);
        }
  }

  TEST_CASE("numeric evaluation of exact terms") {
    const ExactTerm a = a_coeff(1, 0, 4);
    const Real value = a.evaluate([](int) { return Real(2); });
    CHECK(std::fabs(value - Real(1) / 4 / kPi * 2) < 1e-18L);
    CHECK_FALSE(a.to_string().empty());
  }
}
