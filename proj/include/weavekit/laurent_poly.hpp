#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace weavekit {

using BigInt = mpz_class;
using Rational = mpq_class;

/**
 * One-variable Laurent polynomial with arbitrary-precision integer
 * coefficients.
 *
 * Storage is dense: coeffs()[k] is the coefficient of x^(lowest_exp()+k).
 * Values are kept trimmed, so the first and last stored coefficients are
 * nonzero and the zero polynomial is the empty sequence with lowest_exp 0.
 */
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long lowest_exp, std::vector<BigInt> coeffs);
  LaurentPoly(long lowest_exp, std::initializer_list<long> coeffs);

  static LaurentPoly constant(const BigInt& c);
  static LaurentPoly monomial(const BigInt& c, long exp);

  bool is_zero() const { return coeffs_.empty(); }
  long lowest_exp() const { return lowest_; }
  /// Undefined (returns lowest_exp()-1) for the zero polynomial.
  long highest_exp() const { return lowest_ + static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  BigInt coefficient(long k) const;
  /// highest_exp - lowest_exp; 0 for zero and for monomials.
  long span() const;
  /// Largest bit length among the coefficients.
  std::size_t max_bits() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const BigInt& c);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const BigInt& c) { return a *= c; }
  friend LaurentPoly operator*(const BigInt& c, LaurentPoly a) { return a *= c; }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

 private:
  void trim();

  long lowest_ = 0;
  std::vector<BigInt> coeffs_;
};

/// x^k * p
LaurentPoly shifted(const LaurentPoly& p, long k);

/// Quotient r with r*d == p. Throws NonDivisible otherwise.
LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& d);

/// x -> x^k. k must be nonzero.
LaurentPoly substitute_power(const LaurentPoly& p, long k);

/// x -> -x
LaurentPoly alternate_signs(const LaurentPoly& p);

/// Inverse of substitute_power(p, k) for k > 0. Throws RangeError if some
/// exponent is not divisible by k.
LaurentPoly deflate(const LaurentPoly& p, long k);

/// p(x) - eps * x^d * p(1/x); zero iff p is (anti)palindromic about d/2.
bool is_palindromic(const LaurentPoly& p, long d, int sign = 1);

BigInt coefficient(const LaurentPoly& p, long k);
long span(const LaurentPoly& p);
Rational eval_rational(const LaurentPoly& p, const Rational& x);

/// Descending powers, e.g. "t^4 - 4t^3 + 6t^2 - 7t + 9 - 7t^-1".
std::string to_string(const LaurentPoly& p, std::string_view var = "t");

/// Accepts the to_string format; whitespace, '*', and braces around
/// exponents are ignored. Throws ParseError.
LaurentPoly parse_laurent(std::string_view text, std::string_view var = "t");

nlohmann::json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const nlohmann::json& j);

}  // namespace weavekit
