#pragma once

#include <optional>
#include <string>
#include <vector>

#include "weavekit/laurent_poly.hpp"

namespace weavekit {

/**
 * Coordinates of rho((T1 T2^-1)^n) in H_3 on the basis
 * {1, T1, T2, T1T2, T2T1, T1T2T1}. The T1T2T1 coordinate is always zero and
 * is not stored.
 */
struct HeckeCoeffs {
  long n = 1;
  LaurentPoly c0, c1, c2, c12, c21;

  friend bool operator==(const HeckeCoeffs&, const HeckeCoeffs&) = default;
};

HeckeCoeffs initial_coeffs();

/// One application of the recursion. Throws RecursionInvariantViolated when
/// the T1T2T1 coordinate of the result would be nonzero.
HeckeCoeffs step(const HeckeCoeffs& prev);

/// Iterates step from initial_coeffs. n >= 1.
HeckeCoeffs coeffs(long n);

/// Independent expansion of (T1 T2^-1)^n by word rewriting with 6x6 matrices.
/// Like the recursion, it returns the coordinates of q^n (T1 T2^-1)^n.
HeckeCoeffs oracle_matrix_power(long n);

struct StructureItem {
  std::string name;
  bool passed;
  std::string detail;
};

struct StructureReport {
  long n = 0;
  std::vector<StructureItem> items;
  bool all_passed() const;
};

/// Trailing and degree-one coefficients, palindromic identities, degrees.
/// Requires h.n >= 2.
StructureReport check_structure(const HeckeCoeffs& h);

struct SecondOrderCoeffs {
  std::optional<BigInt> c_n_0_2;   // n >= 3
  std::optional<BigInt> c_n_0_3;   // n >= 5
  std::optional<BigInt> c_n_1_2;   // n >= 4
  std::optional<BigInt> c_n_1_3;   // n >= 4
  std::optional<BigInt> c_n_21_2;  // n >= 3
};

/// Closed forms for low-order coefficients. Fields outside their validity
/// range are empty; RangeError if n < 3 (no formula applies).
SecondOrderCoeffs second_order_coeffs(long n);

/// Compares every populated field of second_order_coeffs(n) with h.
bool check_second_order(const HeckeCoeffs& h);

nlohmann::json to_json(const HeckeCoeffs& h);

}  // namespace weavekit
