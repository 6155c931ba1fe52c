#include "hlab/combinatorics.hpp"

#include <cmath>
#include <sstream>

#include "hlab/errors.hpp"

namespace hlab {

namespace {

Rational half(int twice) { return Rational(twice, 2); }

ExactTerm scalar(Rational r) {
  ExactTerm t;
  t.rational = std::move(r);
  return t;
}

}  // namespace

bool ExactTerm::symbol_free() const {
  for (const auto& [arg, power] : mellin_powers)
    if (power != 0) return false;
  return true;
}

std::string ExactTerm::to_string() const {
  std::ostringstream os;
  os << hlab::to_string(rational);
  if (pi_twice != 0) os << " * pi^(" << pi_twice << "/2)";
  for (const auto& [arg, power] : mellin_powers)
    if (power != 0) os << " * M'(" << arg << ")^" << power;
  return os.str();
}

Real ExactTerm::evaluate(const std::function<Real(int)>& mellin_prime_at) const {
  Real v = to_real(rational) * std::pow(kPi, Real(pi_twice) / 2);
  for (const auto& [arg, power] : mellin_powers)
    if (power != 0) v *= std::pow(mellin_prime_at(arg), Real(power));
  return v;
}

ExactTerm operator*(const ExactTerm& a, const ExactTerm& b) {
  ExactTerm out;
  out.rational = a.rational * b.rational;
  out.pi_twice = a.pi_twice + b.pi_twice;
  out.mellin_powers = a.mellin_powers;
  for (const auto& [arg, power] : b.mellin_powers) out.mellin_powers[arg] += power;
  for (auto it = out.mellin_powers.begin(); it != out.mellin_powers.end();)
    it = it->second == 0 ? out.mellin_powers.erase(it) : std::next(it);
  return out;
}

Rational rational_factorial(std::uint32_t n) {
  Rational r(1);
  for (std::uint32_t i = 2; i <= n; ++i) r *= i;
  return r;
}

Rational rational_power(const Rational& base, std::uint32_t n) {
  Rational r(1);
  for (std::uint32_t i = 0; i < n; ++i) r *= base;
  return r;
}

Rational rational_binomial(const Rational& a, std::uint32_t n) {
  Rational r(1);
  for (std::uint32_t i = 0; i < n; ++i) r *= (a - i);
  return r / rational_factorial(n);
}

ExactTerm a_coeff(int k, int n, int d) {
  if (k < 0 || n < 0) throw DomainError("a(k, n) needs k, n >= 0");
  if (d < 2) throw DomainError("dimension must be at least 2");
  ExactTerm t;
  t.rational = rational_factorial(n) /
               (rational_power(Rational(4), k) * rational_factorial(k) * rational_factorial(2 * n)) *
               rational_binomial(Rational(k + n + 1) - half(d), n);
  t.pi_twice = 2 - d;
  t.mellin_powers[2 * k + 2 * n + 3 - d] = 1;
  return t;
}

ExactTerm alpha_matrix(int k, int m, int l, int d) {
  if (l < 0 || l > k || m < 0) throw DomainError("alpha(k)_{ml} needs 0 <= l <= k and m >= 0");
  return scalar(rational_binomial(Rational(l + m), m)) * a_coeff(l + m, k - l, d);
}

ExactTerm q_coeff(int k, int m, int o, int d) {
  if (m < 0 || m > k || o < 0) throw DomainError("q(k, m, o) needs 0 <= m <= k and o >= 0");
  ExactTerm t;
  t.rational = rational_power(Rational(4), k + m + o) * rational_factorial(m + o) * rational_factorial(k) *
               rational_binomial(half(d) - 1 - o - k, m) * rational_binomial(Rational(2 * k + o + 1) - half(d), k - m);
  t.pi_twice = d - 2;
  t.mellin_powers[2 * k + 2 * m + 2 * o - d + 3] = -1;
  return t;
}

ExactTerm q_coeff_half_dimension_offset(int k, int m, int d) {
  if (d % 2 != 0) throw DomainError("offset d/2 - 1 needs even d");
  const int h = d / 2 - 1;
  ExactTerm t;
  t.rational = rational_power(Rational(4), h) * rational_power(Rational(4), k + m) * rational_factorial(m + h) *
               rational_factorial(k) * rational_binomial(Rational(-k), m) * rational_binomial(Rational(2 * k), k - m);
  t.pi_twice = d - 2;
  t.mellin_powers[2 * k + 2 * m + 1] = -1;
  return t;
}

ExactTerm q_coeff_single_term(int k, int d) {
  if (d % 2 != 0 || k > d / 2 - 1) throw DomainError("single-term offset needs even d and k <= d/2 - 1");
  const int h = d / 2 - 1;
  ExactTerm t;
  t.rational = rational_power(Rational(4), h) * rational_factorial(h - k) * rational_factorial(k);
  t.pi_twice = d - 2;
  t.mellin_powers[1] = -1;
  return t;
}

LeftInverseCertificate verify_left_inverse(int k, int o, int d, const QFunction& q) {
  LeftInverseCertificate cert;
  cert.k = k;
  cert.o = o;
  cert.d = d;
  cert.holds = true;
  for (int l = 0; l <= k; ++l) {
    Rational sum(0);
    for (int m = 0; m <= k; ++m) {
      const ExactTerm product = q(k, m, o, d) * alpha_matrix(k, m + o, l, d);
      if (product.rational == 0) continue;
      if (!product.symbol_free() || product.pi_twice != 0)
        throw SymbolMismatchError("q * alpha keeps a symbolic factor: " + product.to_string());
      sum += product.rational;
    }
    const Rational residual = sum - Rational(l == k ? 1 : 0);
    cert.residual.push_back(residual);
    if (residual != 0) cert.holds = false;
  }
  return cert;
}

Rational msexp_coeff(int k, const Rational& alpha) {
  if (k < 0) throw DomainError("msexp coefficient needs k >= 0");
  return rational_factorial(k) / rational_factorial(2 * k) * rational_binomial((alpha + 2 * k - 1) / 2, k);
}

std::string to_string(const Rational& r) { return r.str(); }

Real to_real(const Rational& r) { return r.convert_to<Real>(); }

}  // namespace hlab
