#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "weavekit/laurent_poly.hpp"

namespace weavekit {

struct GeomConstants {
  static constexpr double v_oct = 3.66386237670887606;
  static constexpr double v_tet = 1.01494160640965363;
};

struct TwistReport {
  long n = 0;
  std::map<long, BigInt> values;          // k -> T_k
  std::map<long, bool> closed_form_match;  // filled when n is known
};

/// T_k = |coefficient at lowest+k| + |coefficient at highest-k|, 1 <= k <= k_max.
/// RangeError if 2 k_max exceeds the span.
TwistReport twist_numbers(const LaurentPoly& v, long k_max);

/// Jones polynomial of W(3,n) plus closed-form comparison for k <= min(k_max, 7).
TwistReport twist_report(long n, long k_max);

/// Polynomial in n for T_k(W(3,n)), 1 <= k <= 7, evaluated exactly.
/// Throws NonIntegerValue if the value is not an integer.
BigInt closed_form_T(long k, long n);

/// k >= 4 rows are fitted, not proved.
bool is_conjectural(long k);

/// Leading coefficient of closed_form_T(k, .) as a polynomial in n.
Rational leading_coefficient(long k);

struct ConjectureReport {
  long n_min = 0, n_max = 0;
  std::map<std::pair<long, long>, bool> match;  // (k, n)
  /// Smallest n0 in range such that every n >= n0 in range matches; 0 if none.
  std::map<long, long> threshold;
  std::vector<std::pair<long, long>> mismatches;  // (k, n)
};

/// Compares brute-force twist numbers with closed_form_T for k = 1..7,
/// k <= n-1, over every n in [n_min, n_max].
ConjectureReport verify_conjectures(long n_min, long n_max);

struct VolumeBounds {
  double lower, upper;
};

/// (v_oct/2)(1 - (2 pi)^2/n^2)^(3/2) <= vol/2n < 2 v_tet. RangeError for n <= 2 pi.
VolumeBounds volume_bounds_relative(long n);

/// 4 v_tet / lc_k^(1/k)
double normalization_constant(long k);

/// C_k T_k(n)^(1/k) / 2n using closed_form_T; valid for 2 <= k <= 7 and
/// n >= k + 2. RangeError otherwise.
double normalized_twist_curve(long k, long n);

struct VolumeRecord {
  long n;
  double volume;
};

/// CSV with header "n,volume". ParseError on malformed content, IoError if
/// the file cannot be opened.
std::vector<VolumeRecord> ingest_volumes(const std::string& path);
std::vector<VolumeRecord> parse_volumes(const std::string& csv_text);

struct CorrelationReport {
  long k = 0;
  double pearson_r = 0;
  bool degenerate = false;  // zero variance on one axis; r reported as 0
  std::string scatter_csv;  // "n,T_k,volume"
};

/// MissingData if fewer than 3 rows.
CorrelationReport correlation_report(long k, const std::vector<VolumeRecord>& volumes);

/// "n,lower,upper,curve_k2,curve_k3,curve_k4,vol_rel" for 7 <= n <= max_n,
/// gcd(3,n)=1. vol_rel is filled from volumes when available.
std::string bounds_csv(long n_min, long n_max, const std::vector<VolumeRecord>& volumes = {});

}  // namespace weavekit
