#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "weavekit/laurent_poly.hpp"

namespace weavekit {

/// Rational Khovanov homology: dims[(i, j)] = dim H^{i,j}.
struct KhTable {
  long n = 0;
  long sigma = 0;
  std::map<std::pair<long, long>, BigInt> dims;

  BigInt dim(long i, long j) const;
};

struct IntegralEntry {
  BigInt free_rank;
  BigInt two_torsion_exp;  // H contains (Z/2)^two_torsion_exp
  friend bool operator==(const IntegralEntry&, const IntegralEntry&) = default;
};

struct IntegralKhTable {
  long n = 0;
  long sigma = 0;
  std::map<std::pair<long, long>, IntegralEntry> entries;

  IntegralEntry at(long i, long j) const;
  BigInt total_torsion() const;
};

/// Kh'(x) from the Jones polynomial and signature of an alternating knot.
/// Throws NonDivisible or NegativeCoefficient on inconsistent input.
LaurentPoly kh_prime(const LaurentPoly& v, long sigma);

/// Assembles the table from V and sigma (knight-move pairs plus the
/// exceptional pair in degree 0).
KhTable kh_from_jones(const LaurentPoly& v, long sigma, long n = 0);

/// Table for W(3, n). Requires gcd(3, n) = 1.
KhTable kh_table(long n);

enum class BettiConvention {
  /// The j = 2i-1 line transported by the knight move: value at i is
  /// dims(i-1, 2i-3). This is the normalization behind the published
  /// dimension lists and data tables (the unknot summand's extra unit sits
  /// at i = 1).
  kPublished,
  /// Literal restriction of the table to j = 2i + 1 - sigma.
  kLiteral,
};

using BettiLine = std::vector<std::pair<long, BigInt>>;

/// Nonzero values along the upper line, ascending i.
BettiLine betti_line(const KhTable& kh, BettiConvention conv = BettiConvention::kPublished);
BettiLine betti_line(long n, BettiConvention conv = BettiConvention::kPublished);

/// Free ranks copy the rational table; (Z/2)^a sits at (i, 2i-1-sigma) with
/// a = dims(i-1, 2i-3-sigma), reduced by one when i-1 = 0.
IntegralKhTable integral_kh(const KhTable& kh);
IntegralKhTable integral_kh(long n);

/// Every nonzero entry lies on j = 2i - sigma +- 1. For even p sigma is
/// -n+1, which gives the lines j = 2i + n - 1 +- 1.
bool check_support(const KhTable& kh, long p, long n);

/// sum (-1)^i dims(i,j) Q^j == (Q^-1 + Q) V(Q^2)
bool euler_check(const KhTable& kh, const LaurentPoly& v);

/// Knight-move pairing dims(i, 2i-1-s) == dims(i+1, 2i+3-s) once the unit
/// summand Q^-1 + Q in degree 0 is removed.
bool knight_move_check(const KhTable& kh);

std::string to_csv(const KhTable& kh);
std::string to_csv(const IntegralKhTable& kh);

/// Dot plot of the (i, j) support, one labelled marker per nonzero entry.
std::string to_svg(const KhTable& kh);

}  // namespace weavekit
