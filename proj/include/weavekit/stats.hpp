#pragma once

#include <string>

#include "weavekit/khovanov.hpp"

namespace weavekit {

/// q(x) = -(alpha x^2 - beta x + delta), rho(x) = a_norm * exp(q(x)).
struct GaussianFit {
  double alpha = 0, beta = 0, delta = 0;
  double mu = 0, sigma = 0, a_norm = 0;
};

/// Natural log of a positive big integer, without overflow.
double big_log(const BigInt& x);

/// Least-squares quadratic through (i, ln(dim/total)) over points with
/// dim > 0. Throws DegenerateFit for < 3 distinct points or alpha <= 0.
GaussianFit fit(const BettiLine& bettis);

/// Fit from (x, ln y) samples directly.
GaussianFit fit_log(const std::vector<std::pair<double, double>>& xy);

double density(const GaussianFit& f, double x);

enum class DeviationWindow {
  /// From the smallest to the largest index of the supplied line.
  kSupport,
  /// i = -2n .. 2n+1, zero off the support.
  kFull,
};

double l2_dev(const GaussianFit& f, const BettiLine& bettis,
              DeviationWindow w = DeviationWindow::kSupport, long n = 0);
double l1_dev(const GaussianFit& f, const BettiLine& bettis,
              DeviationWindow w = DeviationWindow::kSupport, long n = 0);

struct TableRow {
  long n = 0;
  BigInt total_dim;
  BigInt dim_h01;
  double sigma = 0, l2 = 0, l1 = 0;
  GaussianFit fit;
};

TableRow table_row(long n);
TableRow table_row_from(long n, const BettiLine& bettis);

/// "n,total_dimension,dim_H01,sigma,L2,L1"
std::string csv_header();
/// sigma to 6 significant digits, L2/L1 to 6 decimals, exact integers.
std::string csv_line(const TableRow& r);

/// d.ddddde+k with the given number of significant digits, rounded half up.
std::string scientific(const BigInt& x, int digits = 6);

}  // namespace weavekit
