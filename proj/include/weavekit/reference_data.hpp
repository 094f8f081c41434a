#pragma once

#include <map>
#include <string>
#include <vector>

#include "weavekit/bilaurent_poly.hpp"
#include "weavekit/khovanov.hpp"

// Published values for W(3, n), used by verify-all and the test suites.
namespace weavekit::reference {

struct StatsRow {
  long n;
  const char* total;  // exact digits, or "d.ddddde+k" when only 6 digits are known
  const char* h01;
  double sigma, l2, l1;
};

const std::vector<StatsRow>& stats_rows();
const StatsRow* find_stats_row(long n);

/// True when text holds every digit (no exponent marker).
bool is_exact(const char* text);

/// Compares x against a reference entry: exact equality for full integers,
/// first 6 significant digits (and magnitude) for scientific entries.
bool matches(const BigInt& x, const char* text);

/// Golden polynomials for n in {4, 5, 10, 11}.
const std::map<long, LaurentPoly>& jones_table();
const std::map<long, LaurentPoly>& alexander_table();
const std::map<long, BiLaurentPoly>& homfly_table();

/// C_{n,*} for n = 2, 3, 4, keyed by n, in the order C0, C1, C2, C12, C21.
const std::map<long, std::vector<LaurentPoly>>& hecke_table();

/// dims along the upper line of W(3,10), i = -9..10.
const std::vector<long>& w310_line();

/// Integral Khovanov homology of W(3,4): (i,j) -> (free rank, 2-torsion exponent).
const std::map<std::pair<long, long>, std::pair<long, long>>& w34_integral();

}  // namespace weavekit::reference
