#include "weavekit/stats.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <set>

#include "weavekit/errors.hpp"

namespace weavekit {

double big_log(const BigInt& x) {
  if (sgn(x) <= 0) throw RangeError("big_log: argument must be positive");
  long e = 0;
  double m = mpz_get_d_2exp(&e, x.get_mpz_t());
  return std::log(m) + static_cast<double>(e) * std::numbers::ln2;
}

GaussianFit fit_log(const std::vector<std::pair<double, double>>& xy) {
  std::set<double> distinct;
  for (const auto& p : xy) distinct.insert(p.first);
  if (distinct.size() < 3) throw DegenerateFit("need at least 3 distinct points");

  // Centre and scale x so the normal equations stay well conditioned.
  long double mean = 0, scale = 0;
  for (const auto& p : xy) mean += p.first;
  mean /= static_cast<long double>(xy.size());
  for (const auto& p : xy) scale = std::max(scale, std::fabs(static_cast<long double>(p.first) - mean));

  std::array<long double, 5> s{};  // sums of u^0..u^4
  std::array<long double, 3> r{};  // sums of y u^0..u^2
  for (const auto& [x, y] : xy) {
    long double u = (static_cast<long double>(x) - mean) / scale, uk = 1;
    for (int k = 0; k < 5; ++k) {
      s[static_cast<std::size_t>(k)] += uk;
      if (k < 3) r[static_cast<std::size_t>(k)] += uk * static_cast<long double>(y);
      uk *= u;
    }
  }
  long double m[3][4] = {{s[0], s[1], s[2], r[0]}, {s[1], s[2], s[3], r[1]}, {s[2], s[3], s[4], r[2]}};
  for (int c = 0; c < 3; ++c) {
    int piv = c;
    for (int k = c + 1; k < 3; ++k)
      if (std::fabs(m[k][c]) > std::fabs(m[piv][c])) piv = k;
    for (int k = 0; k < 4; ++k) std::swap(m[c][k], m[piv][k]);
    if (m[c][c] == 0) throw DegenerateFit("singular normal equations");
    for (int k = 0; k < 3; ++k) {
      if (k == c) continue;
      long double f = m[k][c] / m[c][c];
      for (int l = c; l < 4; ++l) m[k][l] -= f * m[c][l];
    }
  }
  long double c0 = m[0][3] / m[0][0], c1 = m[1][3] / m[1][1], c2 = m[2][3] / m[2][2];
  // y = c0 + c1 u + c2 u^2 with u = (x - mean)/scale; expand in x.
  long double a2 = c2 / (scale * scale);
  long double a1 = c1 / scale - 2 * c2 * mean / (scale * scale);
  long double a0 = c0 - c1 * mean / scale + c2 * mean * mean / (scale * scale);

  GaussianFit f;
  f.alpha = static_cast<double>(-a2);
  f.beta = static_cast<double>(a1);
  f.delta = static_cast<double>(-a0);
  if (!(f.alpha > 0)) throw DegenerateFit("fitted quadratic is not concave");
  long double alpha = -a2, beta = a1, delta = -a0;
  f.mu = static_cast<double>(beta / (2 * alpha));
  f.sigma = static_cast<double>(1 / std::sqrt(2 * alpha));
  f.a_norm = static_cast<double>(std::exp(-(beta * beta / (4 * alpha) - delta)) *
                                 std::sqrt(alpha / std::numbers::pi_v<long double>));
  return f;
}

GaussianFit fit(const BettiLine& bettis) {
  BigInt total = 0;
  for (const auto& [i, d] : bettis) total += d;
  if (sgn(total) <= 0) throw DegenerateFit("no positive dimensions");
  const double lt = big_log(total);
  std::vector<std::pair<double, double>> xy;
  for (const auto& [i, d] : bettis)
    if (sgn(d) > 0) xy.emplace_back(static_cast<double>(i), big_log(d) - lt);
  return fit_log(xy);
}

double density(const GaussianFit& f, double x) {
  double z = (x - f.mu) / f.sigma;
  return std::exp(-0.5 * z * z) / (f.sigma * std::sqrt(2 * std::numbers::pi));
}

namespace {

template <class Acc>
void over_window(const GaussianFit& f, const BettiLine& bettis, DeviationWindow w, long n, Acc acc) {
  if (bettis.empty()) return;
  BigInt total = 0;
  std::map<long, BigInt> by_i;
  long lo = bettis.front().first, hi = bettis.front().first;
  for (const auto& [i, d] : bettis) {
    total += d;
    by_i[i] += d;
    lo = std::min(lo, i);
    hi = std::max(hi, i);
  }
  if (w == DeviationWindow::kFull) {
    if (n == 0) n = hi;
    lo = -2 * n;
    hi = 2 * n + 1;
  }
  const double lt = big_log(total);
  for (long i = lo; i <= hi; ++i) {
    auto it = by_i.find(i);
    double p = (it == by_i.end() || sgn(it->second) == 0) ? 0.0 : std::exp(big_log(it->second) - lt);
    acc(density(f, static_cast<double>(i)) - p);
  }
}

}  // namespace

double l2_dev(const GaussianFit& f, const BettiLine& bettis, DeviationWindow w, long n) {
  double s = 0;
  over_window(f, bettis, w, n, [&](double d) { s += d * d; });
  return std::sqrt(s);
}

double l1_dev(const GaussianFit& f, const BettiLine& bettis, DeviationWindow w, long n) {
  double s = 0;
  over_window(f, bettis, w, n, [&](double d) { s += std::fabs(d); });
  return s;
}

TableRow table_row_from(long n, const BettiLine& bettis) {
  TableRow r;
  r.n = n;
  for (const auto& [i, d] : bettis) {
    r.total_dim += d;
    if (i == 0) r.dim_h01 = d;
  }
  r.fit = fit(bettis);
  r.sigma = r.fit.sigma;
  r.l2 = l2_dev(r.fit, bettis);
  r.l1 = l1_dev(r.fit, bettis);
  return r;
}

TableRow table_row(long n) { return table_row_from(n, betti_line(n)); }

std::string csv_header() { return "n,total_dimension,dim_H01,sigma,L2,L1"; }

std::string csv_line(const TableRow& r) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.6g,%.6f,%.6f", r.sigma, r.l2, r.l1);
  return std::to_string(r.n) + "," + r.total_dim.get_str() + "," + r.dim_h01.get_str() + "," + buf;
}

std::string scientific(const BigInt& x, int digits) {
  if (digits < 1) digits = 1;
  BigInt a = abs(x);
  std::string s = a.get_str();
  long exp10 = static_cast<long>(s.size()) - 1;
  if (static_cast<int>(s.size()) > digits) {
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, s.size() - static_cast<std::size_t>(digits));
    BigInt q = (a + p / 2) / p;
    s = q.get_str();
    if (static_cast<int>(s.size()) > digits) {
      s.pop_back();
      ++exp10;
    }
  } else {
    s.append(static_cast<std::size_t>(digits) - s.size(), '0');
  }
  std::string out = sgn(x) < 0 ? "-" : "";
  out += s.substr(0, 1);
  if (digits > 1) out += "." + s.substr(1);
  return out + "e" + std::to_string(exp10);
}

}  // namespace weavekit
