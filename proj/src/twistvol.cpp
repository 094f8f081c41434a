#include "weavekit/twistvol.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

#include "weavekit/errors.hpp"
#include "weavekit/invariants.hpp"

namespace weavekit {

TwistReport twist_numbers(const LaurentPoly& v, long k_max) {
  if (k_max < 1 || 2 * k_max > v.span())
    throw RangeError("twist_numbers: k_max=" + std::to_string(k_max) + " exceeds half the span");
  TwistReport r;
  for (long k = 1; k <= k_max; ++k)
    r.values[k] = abs(v.coefficient(v.lowest_exp() + k)) + abs(v.coefficient(v.highest_exp() - k));
  return r;
}

TwistReport twist_report(long n, long k_max) {
  TwistReport r = twist_numbers(jones(n), k_max);
  r.n = n;
  for (const auto& [k, t] : r.values) {
    if (k > 7) continue;
    bool ok = false;
    try {
      ok = closed_form_T(k, n) == t;
    } catch (const NonIntegerValue&) {
    }
    r.closed_form_match[k] = ok;
  }
  return r;
}

namespace {

// Ascending coefficients in n.
const std::vector<Rational>& table_row(long k) {
  static const std::vector<std::vector<Rational>> rows = {
      {},
      {0, 2},
      {0, -1, 1},
      {0, Rational(8, 3), -1, Rational(1, 3)},
      {0, Rational(-9, 2), Rational(35, 12), Rational(-1, 2), Rational(1, 12)},
      {0, Rational(42, 5), Rational(-35, 6), Rational(19, 12), Rational(-1, 6), Rational(1, 60)},
      {0, Rational(-52, 3), Rational(2237, 180), Rational(-29, 8), Rational(41, 72),
       Rational(-1, 24), Rational(1, 360)},
      {0, Rational(254, 7), Rational(-413, 15), Rational(1541, 180), Rational(-35, 24),
       Rational(11, 72), Rational(-1, 120), Rational(1, 2520)},
  };
  if (k < 1 || k > 7) throw RangeError("closed_form_T: k must be 1..7");
  return rows[static_cast<std::size_t>(k)];
}

}  // namespace

BigInt closed_form_T(long k, long n) {
  const auto& row = table_row(k);
  Rational acc = 0, x(n);
  for (std::size_t i = row.size(); i-- > 0;) acc = acc * x + row[i];
  acc.canonicalize();
  if (acc.get_den() != 1)
    throw NonIntegerValue("T_" + std::to_string(k) + "(" + std::to_string(n) +
                          ") = " + acc.get_str() + " is not an integer");
  return acc.get_num();
}

bool is_conjectural(long k) { return k >= 4; }

Rational leading_coefficient(long k) { return table_row(k).back(); }

ConjectureReport verify_conjectures(long n_min, long n_max) {
  ConjectureReport rep;
  rep.n_min = n_min;
  rep.n_max = n_max;
  HeckeCoeffs h = coeffs(std::max(1L, n_min));
  for (long n = std::max(1L, n_min); n <= n_max; ++n) {
    if (h.n < n) h = step(h);
    LaurentPoly v = jones_from(h);
    long kmax = std::min({7L, n - 1, v.span() / 2});
    if (kmax < 1) continue;
    TwistReport t = twist_numbers(v, kmax);
    for (long k = 1; k <= kmax; ++k) {
      bool ok = false;
      try {
        ok = closed_form_T(k, n) == t.values[k];
      } catch (const NonIntegerValue&) {
      }
      rep.match[{k, n}] = ok;
      if (!ok) rep.mismatches.emplace_back(k, n);
    }
  }
  for (long k = 1; k <= 7; ++k) {
    long n0 = 0;
    for (long n = n_max; n >= n_min; --n) {
      auto it = rep.match.find({k, n});
      if (it == rep.match.end()) continue;
      if (!it->second) break;
      n0 = n;
    }
    rep.threshold[k] = n0;
  }
  return rep;
}

VolumeBounds volume_bounds_relative(long n) {
  const double two_pi = 2 * std::numbers::pi;
  if (static_cast<double>(n) <= two_pi) throw RangeError("volume_bounds_relative: need n > 2 pi");
  double r = 1 - two_pi * two_pi / (static_cast<double>(n) * static_cast<double>(n));
  return {GeomConstants::v_oct / 2 * std::pow(r, 1.5), 2 * GeomConstants::v_tet};
}

double normalization_constant(long k) {
  double lc = leading_coefficient(k).get_d();
  return 4 * GeomConstants::v_tet / std::pow(lc, 1.0 / static_cast<double>(k));
}

double normalized_twist_curve(long k, long n) {
  if (k < 2 || k > 7) throw RangeError("normalized_twist_curve: k must be 2..7");
  if (n < k + 2) throw RangeError("normalized_twist_curve: need n >= k + 2");
  double t = closed_form_T(k, n).get_d();
  return normalization_constant(k) * std::pow(t, 1.0 / static_cast<double>(k)) /
         (2.0 * static_cast<double>(n));
}

std::vector<VolumeRecord> parse_volumes(const std::string& csv_text) {
  std::istringstream in(csv_text);
  std::string line;
  std::vector<VolumeRecord> out;
  long lineno = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    if (!header) {
      std::string h;
      for (char c : line)
        if (c != ' ' && c != '\t') h.push_back(c);
      if (h != "n,volume") throw ParseError("expected header 'n,volume'");
      header = true;
      continue;
    }
    auto comma = line.find(',');
    if (comma == std::string::npos || line.find(',', comma + 1) != std::string::npos)
      throw ParseError("line " + std::to_string(lineno) + ": expected two fields");
    try {
      std::size_t used = 0;
      std::string a = line.substr(0, comma), b = line.substr(comma + 1);
      long n = std::stol(a, &used);
      if (a.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(a);
      double v = std::stod(b, &used);
      if (b.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(b);
      if (!(v > 0)) throw ParseError("line " + std::to_string(lineno) + ": volume must be positive");
      if (n < 1 || n % 3 == 0)
        throw ParseError("line " + std::to_string(lineno) + ": n must be coprime to 3");
      out.push_back({n, v});
    } catch (const std::logic_error&) {
      throw ParseError("line " + std::to_string(lineno) + ": malformed number");
    }
  }
  if (!header) throw ParseError("empty volume file");
  return out;
}

std::vector<VolumeRecord> ingest_volumes(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw IoError("cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_volumes(ss.str());
}

CorrelationReport correlation_report(long k, const std::vector<VolumeRecord>& volumes) {
  if (volumes.size() < 3) throw MissingData("need at least 3 volume rows");
  CorrelationReport rep;
  rep.k = k;
  std::ostringstream csv;
  csv << "n,T_" << k << ",volume\n";
  std::vector<double> xs, ys;
  for (const auto& rec : volumes) {
    BigInt t = twist_numbers(jones(rec.n), k).values.at(k);
    xs.push_back(t.get_d());
    ys.push_back(rec.volume);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", rec.volume);
    csv << rec.n << ',' << t.get_str() << ',' << buf << '\n';
  }
  rep.scatter_csv = csv.str();
  const double m = static_cast<double>(xs.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= m;
  my /= m;
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
    syy += (ys[i] - my) * (ys[i] - my);
  }
  if (sxx == 0 || syy == 0) {
    rep.degenerate = true;
    rep.pearson_r = 0;
  } else {
    rep.pearson_r = sxy / std::sqrt(sxx * syy);
  }
  return rep;
}

std::string bounds_csv(long n_min, long n_max, const std::vector<VolumeRecord>& volumes) {
  std::map<long, double> vol;
  for (const auto& r : volumes) vol[r.n] = r.volume;
  std::ostringstream os;
  os << "n,lower,upper,curve_k2,curve_k3,curve_k4,vol_rel\n";
  char buf[256];
  for (long n = std::max(7L, n_min); n <= n_max; ++n) {
    if (n % 3 == 0) continue;
    VolumeBounds b = volume_bounds_relative(n);
    std::snprintf(buf, sizeof buf, "%ld,%.12g,%.12g,%.12g,%.12g,%.12g,", n, b.lower, b.upper,
                  normalized_twist_curve(2, n), normalized_twist_curve(3, n),
                  normalized_twist_curve(4, n));
    os << buf;
    if (auto it = vol.find(n); it != vol.end()) {
      std::snprintf(buf, sizeof buf, "%.12g", it->second / (2.0 * static_cast<double>(n)));
      os << buf;
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace weavekit
