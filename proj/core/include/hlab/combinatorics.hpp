#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hlab/types.hpp"

namespace hlab {

using Rational = boost::multiprecision::cpp_rational;

/// rational * pi^(pi_twice / 2) * prod_a M'(f)(a)^power[a]
///
/// M'(f)(a) values are opaque symbols keyed by their integer argument, so
/// products can be decided exactly.
struct ExactTerm {
  Rational rational{0};
  int pi_twice = 0;
  std::map<int, int> mellin_powers;

  bool symbol_free() const;
  std::string to_string() const;
  /// Numeric value given M'(f)(a) for each symbol.
  Real evaluate(const std::function<Real(int)>& mellin_prime_at) const;
};

ExactTerm operator*(const ExactTerm& a, const ExactTerm& b);

/// binom(a, n) for rational a, product formula.
Rational rational_binomial(const Rational& a, std::uint32_t n);
Rational rational_factorial(std::uint32_t n);
Rational rational_power(const Rational& base, std::uint32_t n);

/// a(k, n) = pi^((2-d)/2) n! / (4^k k! (2n)!) binom(k + n + 1 - d/2, n) M'(f)(2k + 2n + 3 - d)
ExactTerm a_coeff(int k, int n, int d);

/// alpha(k)_{ml} = binom(l + m, m) a(l + m, k - l)
ExactTerm alpha_matrix(int k, int m, int l, int d);

/// q(k, m, o) = pi^(d/2-1) 4^(k+m+o) (m+o)! k! / M'(f)(2k+2m+2o-d+3)
///              * binom(d/2 - 1 - o - k, m) binom(2k + o + 1 - d/2, k - m)
ExactTerm q_coeff(int k, int m, int o, int d);

/// q with o = d/2 - 1 in the closed form
/// (4 pi)^(d/2-1) 4^(k+m) (m + d/2 - 1)! k! / M'(f)(2k+2m+1) binom(-k, m) binom(2k, k-m), d even.
ExactTerm q_coeff_half_dimension_offset(int k, int m, int d);

/// q(k, 0, d/2 - 1 - k) = (4 pi)^(d/2-1) (d/2-1-k)! k! / M'(f)(1), d even, k <= d/2 - 1.
ExactTerm q_coeff_single_term(int k, int d);

using QFunction = std::function<ExactTerm(int k, int m, int o, int d)>;

struct LeftInverseCertificate {
  int k = 0;
  int o = 0;
  int d = 0;
  /// residual[l] = sum_m q(k,m,o) alpha(k)_{m+o,l} - delta_{kl}
  std::vector<Rational> residual;
  bool holds = false;
};

/// Checks sum_m q(k, m, o) alpha(k)_{m+o, l} = delta_{kl} for 0 <= l <= k in
/// exact arithmetic. Throws SymbolMismatchError if a product keeps a symbol.
LeftInverseCertificate verify_left_inverse(int k, int o, int d, const QFunction& q = q_coeff);

/// k! / (2k)! binom((alpha + 2k - 1) / 2, k)
Rational msexp_coeff(int k, const Rational& alpha);

std::string to_string(const Rational& r);
Real to_real(const Rational& r);

}  // namespace hlab
