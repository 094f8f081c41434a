#pragma once

#include "weavekit/bilaurent_poly.hpp"
#include "weavekit/hecke3.hpp"
#include "weavekit/laurent_poly.hpp"

namespace weavekit {

/// The weaving knot or link W(p, n): closure of (s1 s2^-1 s3 ...)^n on p strands.
struct WeaveId {
  long p = 3;
  long n = 1;
  bool is_knot() const;
};

struct DiagramCounts {
  long crossings = 0;
  long negatives = 0;
  long positives = 0;
  long a_circles = 0;  // circles in the all-A smoothing
};

/// Counts for the standard diagram. Requires p >= 3.
DiagramCounts diagram_counts(const WeaveId& w);

/// o - y - 1, valid for reduced alternating diagrams of non-split links.
long signature_alternating(long o, long y);

long signature(const WeaveId& w);
long rasmussen_s(const WeaveId& w);

/// Jones polynomial of W(3, n) in t.
LaurentPoly jones(long n);
LaurentPoly jones_from(const HeckeCoeffs& h);

/// Kauffman-bracket state sum over the 2n-crossing closed-braid diagram.
/// Independent of the Hecke pipeline. n <= 10. jobs splits the state range.
LaurentPoly jones_bracket_oracle(long n, unsigned jobs = 1);

/// Alexander polynomial of W(3, n), Conway-normalized.
LaurentPoly alexander(long n);
LaurentPoly alexander_from(const HeckeCoeffs& h);

/// n - 1, read off as half the span of alexander(n). Requires gcd(3,n) = 1.
/// Throws InvariantViolation if the top coefficient is not +-1.
long seifert_genus(long n);

/// HOMFLY-PT polynomial H(a, z) of W(3, n); e1 is the power of a.
BiLaurentPoly homfly(long n);
BiLaurentPoly homfly_from(const HeckeCoeffs& h);

/// a -> t, z^2 -> t - 2 + t^-1. Throws ChangeOfVariablesError on odd z powers.
LaurentPoly homfly_to_jones(const BiLaurentPoly& h);
/// a -> 1, z^2 -> t - 2 + t^-1.
LaurentPoly homfly_to_alexander(const BiLaurentPoly& h);

/// Closed form for the coefficient of t^(-n+k) in jones(n), k in 0..3.
/// Thresholds: k=0 n>=2, k=1 n>=3, k=2,3 n>=5. RangeError otherwise.
BigInt jones_coefficient_formulas(long n, long k);

}  // namespace weavekit
