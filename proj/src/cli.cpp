#include "weavekit/cli.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "weavekit/errors.hpp"
#include "weavekit/hecke3.hpp"
#include "weavekit/invariants.hpp"
#include "weavekit/khovanov.hpp"
#include "weavekit/reference_data.hpp"
#include "weavekit/stats.hpp"
#include "weavekit/twistvol.hpp"

namespace weavekit {

namespace {

using nlohmann::json;

const std::map<std::string, Command>& command_names() {
  static const std::map<std::string, Command> m = {
      {"hecke", Command::kHecke},
      {"jones", Command::kJones},
      {"alexander", Command::kAlexander},
      {"homfly", Command::kHomfly},
      {"khovanov", Command::kKhovanov},
      {"integral-khovanov", Command::kIntegralKhovanov},
      {"stats", Command::kStats},
      {"twist", Command::kTwist},
      {"bounds", Command::kBounds},
      {"correlate", Command::kCorrelate},
      {"verify-all", Command::kVerifyAll},
  };
  return m;
}

bool knot_only(Command c) {
  switch (c) {
    case Command::kHomfly:
    case Command::kKhovanov:
    case Command::kIntegralKhovanov:
    case Command::kStats:
    case Command::kTwist:
      return true;
    default:
      return false;
  }
}

int precision_digits() {
  const char* env = std::getenv("WEAVEKIT_PRECISION_DIGITS");
  if (!env) return 6;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || v < 1 || v > 17) return 6;
  return static_cast<int>(v);
}

std::string real(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

// Integers beyond 20 digits are shown in scientific notation in text output.
std::string text_int(const BigInt& x, int digits) {
  std::string s = x.get_str();
  return s.size() > 20 ? scientific(x, digits) : s;
}

// One n-value's contribution to each output format.
struct Piece {
  std::string text;
  json js;
  std::string csv;  // rows only, no header
  std::string svg;
  bool ok = true;
};

std::string poly_csv_rows(long n, const LaurentPoly& p) {
  std::ostringstream os;
  for (std::size_t k = 0; k < p.coeffs().size(); ++k)
    if (sgn(p.coeffs()[k]) != 0)
      os << n << ',' << p.lowest_exp() + static_cast<long>(k) << ',' << p.coeffs()[k].get_str() << '\n';
  return os.str();
}

Piece hecke_piece(const RunConfig& cfg, long n, std::ostream& err) {
  Piece pc;
  HeckeCoeffs h = coeffs(n);
  pc.js = to_json(h);
  std::ostringstream os;
  os << "n=" << n << '\n';
  const std::pair<const char*, const LaurentPoly*> named[] = {
      {"C0", &h.c0}, {"C1", &h.c1}, {"C2", &h.c2}, {"C12", &h.c12}, {"C21", &h.c21}};
  std::ostringstream csv;
  for (const auto& [name, p] : named) {
    os << "  " << name << " = " << to_string(*p, "q") << '\n';
    for (std::size_t k = 0; k < p->coeffs().size(); ++k)
      csv << n << ',' << name << ',' << p->lowest_exp() + static_cast<long>(k) << ','
          << p->coeffs()[k].get_str() << '\n';
  }
  if (cfg.oracle) {
    if (n <= 12) {
      pc.ok = oracle_matrix_power(n) == h;
      os << "  oracle: " << (pc.ok ? "match" : "MISMATCH") << '\n';
      pc.js["oracle_match"] = pc.ok;
    } else {
      err << "note: oracle skipped for n=" << n << " (limit 12)\n";
    }
  }
  pc.text = os.str();
  pc.csv = csv.str();
  return pc;
}

Piece jones_piece(const RunConfig& cfg, long n, bool single, std::ostream& err) {
  Piece pc;
  LaurentPoly v = jones(n);
  pc.text = (single ? "" : "n=" + std::to_string(n) + ": ") + to_string(v, "t") + '\n';
  pc.js = {{"n", n}, {"jones", to_json(v)}};
  pc.csv = poly_csv_rows(n, v);
  if (cfg.oracle) {
    if (n <= 10) {
      pc.ok = jones_bracket_oracle(n, cfg.jobs) == v;
      pc.text += "oracle: " + std::string(pc.ok ? "match" : "MISMATCH") + '\n';
      pc.js["oracle_match"] = pc.ok;
    } else {
      err << "note: bracket oracle skipped for n=" << n << " (limit 10)\n";
    }
  }
  return pc;
}

Piece alexander_piece(long n, bool single) {
  Piece pc;
  LaurentPoly d = alexander(n);
  pc.text = (single ? "" : "n=" + std::to_string(n) + ": ") + to_string(d, "t") + '\n';
  pc.js = {{"n", n}, {"alexander", to_json(d)}};
  pc.csv = poly_csv_rows(n, d);
  return pc;
}

Piece homfly_piece(long n, bool single) {
  Piece pc;
  BiLaurentPoly h = homfly(n);
  pc.text = (single ? "" : "n=" + std::to_string(n) + ": ") + to_string(h) + '\n';
  pc.js = {{"n", n}, {"homfly", to_json(h)}};
  std::ostringstream os;
  for (const auto& [k, c] : h.terms()) os << n << ',' << k.first << ',' << k.second << ',' << c.get_str() << '\n';
  pc.csv = os.str();
  return pc;
}

// Drops the CSV header and, for multi-n output, prefixes each row with n.
std::string csv_body(const std::string& csv, long n, bool single) {
  std::string out;
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) out += (single ? "" : std::to_string(n) + ",") + line + '\n';
  return out;
}

Piece khovanov_piece(long n, bool single) {
  Piece pc;
  KhTable kh = kh_table(n);
  pc.csv = csv_body(to_csv(kh), n, single);
  json dims = json::array();
  std::ostringstream os;
  os << "n=" << n << " sigma=" << kh.sigma << '\n';
  for (const auto& [k, d] : kh.dims) {
    dims.push_back({{"i", k.first}, {"j", k.second}, {"dim", d.get_str()}});
    os << "  H^{" << k.first << "," << k.second << "} = " << d.get_str() << '\n';
  }
  pc.text = os.str();
  pc.js = {{"n", n}, {"sigma", kh.sigma}, {"dims", dims}};
  pc.svg = to_svg(kh);
  return pc;
}

Piece integral_piece(long n, bool single) {
  Piece pc;
  IntegralKhTable kh = integral_kh(n);
  pc.csv = csv_body(to_csv(kh), n, single);
  json entries = json::array();
  std::ostringstream os;
  os << "n=" << n << " sigma=" << kh.sigma << '\n';
  for (const auto& [k, e] : kh.entries) {
    entries.push_back({{"i", k.first},
                       {"j", k.second},
                       {"free_rank", e.free_rank.get_str()},
                       {"two_torsion_exp", e.two_torsion_exp.get_str()}});
    os << "  H^{" << k.first << "," << k.second << "} = Z^" << e.free_rank.get_str();
    if (sgn(e.two_torsion_exp) > 0) os << " + (Z/2)^" << e.two_torsion_exp.get_str();
    os << '\n';
  }
  pc.text = os.str();
  pc.js = {{"n", n}, {"sigma", kh.sigma}, {"entries", entries}};
  return pc;
}

Piece stats_piece(long n) {
  Piece pc;
  TableRow r = table_row(n);
  int dg = precision_digits();
  pc.csv = csv_line(r) + '\n';
  pc.text = "n=" + std::to_string(n) + "  total=" + text_int(r.total_dim, dg) +
            "  H01=" + text_int(r.dim_h01, dg) + "  sigma=" + real(r.sigma, dg) +
            "  mu=" + real(r.fit.mu, dg) + "  L2=" + real(r.l2, dg) + "  L1=" + real(r.l1, dg) + '\n';
  pc.js = {{"n", n},
           {"total_dimension", r.total_dim.get_str()},
           {"dim_H01", r.dim_h01.get_str()},
           {"sigma", r.sigma},
           {"mu", r.fit.mu},
           {"alpha", r.fit.alpha},
           {"beta", r.fit.beta},
           {"delta", r.fit.delta},
           {"a_norm", r.fit.a_norm},
           {"L2", r.l2},
           {"L1", r.l1}};
  return pc;
}

Piece twist_piece(const RunConfig& cfg, long n) {
  Piece pc;
  const long k_max = cfg.k > 0 ? cfg.k : 3;
  LaurentPoly v = jones(n);
  long usable = std::min(k_max, v.span() / 2);
  if (usable < 1) throw RangeError("twist: span of jones(" + std::to_string(n) + ") too small");
  TwistReport t = twist_numbers(v, usable);
  std::ostringstream os, csv;
  json vals = json::array();
  for (const auto& [k, val] : t.values) {
    json e = {{"k", k}, {"T", val.get_str()}};
    os << "n=" << n << " T" << k << "=" << val.get_str();
    csv << n << ',' << k << ',' << val.get_str() << ',';
    bool show = k <= 7 && (!is_conjectural(k) || cfg.conjectural);
    if (show) {
      std::string cf;
      bool match = false;
      try {
        BigInt c = closed_form_T(k, n);
        cf = c.get_str();
        match = c == val;
      } catch (const NonIntegerValue&) {
        cf = "non-integer";
      }
      os << "  closed form " << cf << (match ? " (match)" : " (MISMATCH)");
      if (is_conjectural(k)) os << " [conjectural]";
      e["closed_form"] = cf;
      e["match"] = match;
      e["conjectural"] = is_conjectural(k);
      csv << cf << ',' << (match ? "1" : "0");
      // Proved formulas hold from n = k + 2 on; a failure there is a real error.
      if (!match && !is_conjectural(k) && n >= k + 2) pc.ok = false;
    } else {
      csv << ',';
    }
    os << '\n';
    csv << '\n';
    vals.push_back(e);
  }
  pc.text = os.str();
  pc.csv = csv.str();
  pc.js = {{"n", n}, {"twist", vals}};
  return pc;
}

void write_output(const RunConfig& cfg, const std::string& data, std::ostream& out) {
  if (cfg.out.empty()) {
    out << data;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw IoError("cannot open " + cfg.out + " for writing");
  f << data;
  if (!f) throw IoError("write failed: " + cfg.out);
}

std::vector<Piece> compute_all(const std::vector<long>& ns, unsigned jobs,
                               const std::function<Piece(long)>& fn) {
  std::vector<Piece> pieces(ns.size());
  std::vector<std::exception_ptr> errors(ns.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < ns.size();) {
      try {
        pieces[i] = fn(ns[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  unsigned threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(ns.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return pieces;
}

std::string csv_header_for(Command c, bool single) {
  switch (c) {
    case Command::kHecke: return "n,poly,exp,coeff";
    case Command::kJones:
    case Command::kAlexander: return "n,exp,coeff";
    case Command::kHomfly: return "n,a_exp,z_exp,coeff";
    case Command::kKhovanov: return single ? "i,j,dim" : "n,i,j,dim";
    case Command::kIntegralKhovanov:
      return single ? "i,j,free_rank,two_torsion_exp" : "n,i,j,free_rank,two_torsion_exp";
    case Command::kStats: return csv_header();
    case Command::kTwist: return "n,k,T_k,closed_form,match";
    default: return "";
  }
}

// ---- verify-all ----

struct Check {
  std::string name;
  bool passed;
  std::string detail;
};

std::vector<Check> verify_suite(long max_n, unsigned jobs) {
  std::vector<Check> out;
  auto add = [&](std::string name, bool ok, std::string detail = "") {
    out.push_back({std::move(name), ok, std::move(detail)});
  };
  auto first_bad = [](const std::vector<long>& bad) {
    return bad.empty() ? std::string() : "first failure at n=" + std::to_string(bad.front());
  };

  std::vector<HeckeCoeffs> hs;
  HeckeCoeffs h = initial_coeffs();
  hs.push_back(h);
  std::vector<long> bad_step;
  try {
    while (h.n < max_n) {
      h = step(h);
      hs.push_back(h);
    }
  } catch (const RecursionInvariantViolated& e) {
    bad_step.push_back(h.n + 1);
  }
  add("hecke: T1T2T1 coordinate vanishes", bad_step.empty(), first_bad(bad_step));
  if (!bad_step.empty()) return out;

  std::vector<long> bad;
  for (long n = 1; n <= std::min(max_n, 10L); ++n)
    if (!(oracle_matrix_power(n) == hs[static_cast<std::size_t>(n - 1)])) bad.push_back(n);
  add("hecke: recursion equals matrix oracle (n<=10)", bad.empty(), first_bad(bad));

  bad.clear();
  for (long n = 2; n <= max_n; ++n)
    if (!check_structure(hs[static_cast<std::size_t>(n - 1)]).all_passed()) bad.push_back(n);
  add("hecke: structure (trailing, degree one, palindromes, degrees)", bad.empty(), first_bad(bad));

  bad.clear();
  for (long n = 3; n <= max_n; ++n)
    if (!check_second_order(hs[static_cast<std::size_t>(n - 1)])) bad.push_back(n);
  add("hecke: low-order coefficient formulas", bad.empty(), first_bad(bad));

  for (const auto& [n, polys] : reference::hecke_table()) {
    if (n > max_n) continue;
    const auto& g = hs[static_cast<std::size_t>(n - 1)];
    bool ok = g.c0 == polys[0] && g.c1 == polys[1] && g.c2 == polys[2] && g.c12 == polys[3] &&
              g.c21 == polys[4];
    add("hecke: tabulated C_{" + std::to_string(n) + ",*}", ok);
  }

  std::vector<long> knots;
  for (long n = 1; n <= max_n; ++n)
    if (n % 3 != 0) knots.push_back(n);

  std::vector<LaurentPoly> vs, ds;
  for (const auto& hh : hs) {
    vs.push_back(jones_from(hh));
    ds.push_back(alexander_from(hh));
  }
  auto V = [&](long n) -> const LaurentPoly& { return vs[static_cast<std::size_t>(n - 1)]; };
  auto D = [&](long n) -> const LaurentPoly& { return ds[static_cast<std::size_t>(n - 1)]; };

  for (const auto& [n, g] : reference::jones_table())
    if (n <= max_n) add("jones: table n=" + std::to_string(n), V(n) == g);
  for (const auto& [n, g] : reference::alexander_table())
    if (n <= max_n) add("alexander: table n=" + std::to_string(n), D(n) == g);

  bad.clear();
  for (long n : knots)
    if (n <= 10 && !(jones_bracket_oracle(n, jobs) == V(n))) bad.push_back(n);
  add("jones: bracket oracle (knots, n<=10)", bad.empty(), first_bad(bad));

  bad.clear();
  for (long n = 1; n <= max_n; ++n)
    if (!(substitute_power(V(n), -1) == V(n)) || !(substitute_power(D(n), -1) == D(n)))
      bad.push_back(n);
  add("jones/alexander: symmetric under t -> 1/t", bad.empty(), first_bad(bad));

  bad.clear();
  for (long n : knots) {
    if (n < 2) continue;
    const auto& v = V(n);
    BigInt e = (n % 2 == 0) ? 1 : -1;
    if (v.span() != 2 * n || v.coeffs().front() != e || v.coeffs().back() != e) bad.push_back(n);
  }
  add("jones: span 2n and extreme coefficients", bad.empty(), first_bad(bad));

  bad.clear();
  for (long n : knots)
    for (long k = 0; k <= 3; ++k) {
      static const long th[4] = {2, 3, 5, 5};
      if (n >= th[k] && jones_coefficient_formulas(n, k) != V(n).coefficient(-n + k)) {
        bad.push_back(n);
        break;
      }
    }
  add("jones: low-order coefficient formulas", bad.empty(), first_bad(bad));

  bad.clear();
  for (long n : knots)
    if (seifert_genus(n) != n - 1) bad.push_back(n);
  add("alexander: genus n-1 and monic", bad.empty(), first_bad(bad));

  bad.clear();
  for (long n : knots) {
    BiLaurentPoly hf = homfly_from(hs[static_cast<std::size_t>(n - 1)]);
    if (!(homfly_to_jones(hf) == V(n)) || !(homfly_to_alexander(hf) == D(n))) bad.push_back(n);
    auto it = reference::homfly_table().find(n);
    if (it != reference::homfly_table().end() && !(it->second == hf)) bad.push_back(n);
  }
  add("homfly: tables and Jones/Alexander specializations", bad.empty(), first_bad(bad));

  bad.clear();
  for (long n : knots) {
    KhTable kh = kh_from_jones(V(n), 0, n);
    if (!check_support(kh, 3, n) || !euler_check(kh, V(n)) || !knight_move_check(kh))
      bad.push_back(n);
    IntegralKhTable ik = integral_kh(kh);
    BigInt upper = 0;
    for (const auto& [i, d] : betti_line(kh, BettiConvention::kLiteral)) upper += d;
    if (ik.total_torsion() != upper - 1) bad.push_back(n);
  }
  add("khovanov: support lines, Euler characteristic, knight move, torsion count", bad.empty(),
      first_bad(bad));

  if (max_n >= 4) {
    IntegralKhTable ik = integral_kh(4);
    bool ok = true;
    for (const auto& [k, e] : ik.entries) {
      auto it = reference::w34_integral().find(k);
      long fr = it == reference::w34_integral().end() ? 0 : it->second.first;
      long tor = it == reference::w34_integral().end() ? 0 : it->second.second;
      ok = ok && e.free_rank == fr && e.two_torsion_exp == tor;
    }
    for (const auto& [k, e] : reference::w34_integral()) {
      IntegralEntry got = ik.at(k.first, k.second);
      ok = ok && got.free_rank == e.first && got.two_torsion_exp == e.second;
    }
    add("khovanov: integral homology of W(3,4)", ok);
  }

  for (const auto& row : reference::stats_rows()) {
    if (row.n > max_n) continue;
    TableRow r = table_row_from(row.n, betti_line(kh_from_jones(V(row.n), 0, row.n)));
    bool ok = reference::matches(r.total_dim, row.total) && reference::matches(r.dim_h01, row.h01) &&
              std::fabs(r.sigma - row.sigma) <= 1e-4 && std::fabs(r.l2 - row.l2) <= 1e-5 &&
              std::fabs(r.l1 - row.l1) <= 1e-5;
    add("stats: table row n=" + std::to_string(row.n), ok, csv_line(r));
  }

  bad.clear();
  for (long n = 3; n <= max_n; ++n) {
    long kmax = std::min(3L, n - 2);
    TwistReport t = twist_numbers(V(n), kmax);
    for (long k = 1; k <= kmax; ++k)
      if (t.values[k] != closed_form_T(k, n)) {
        bad.push_back(n);
        break;
      }
  }
  add("twist: T1, T2, T3 closed forms (n >= k+2)", bad.empty(), first_bad(bad));

  bool curve_ok = true, mono_ok = true;
  double prev = -1;
  for (long n = 7; n <= max_n; ++n) {
    double lo = volume_bounds_relative(n).lower;
    if (!(lo > prev)) mono_ok = false;
    prev = lo;
    for (long k = 2; k <= 4; ++k)
      if (n >= k + 2 && !(normalized_twist_curve(k, n) < 2 * GeomConstants::v_tet)) curve_ok = false;
  }
  add("bounds: lower bound increasing, curves below 2 v_tet", curve_ok && mono_ok);
  return out;
}

int run_verify(const RunConfig& cfg, std::ostream& out) {
  auto checks = verify_suite(cfg.max_n, cfg.jobs);
  bool all = true;
  std::ostringstream os;
  json arr = json::array();
  for (const auto& c : checks) {
    all = all && c.passed;
    os << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.passed && !c.detail.empty()) os << ": " << c.detail;
    os << '\n';
    arr.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  if (cfg.format == Format::kJson) {
    write_output(cfg, json{{"max_n", cfg.max_n}, {"passed", all}, {"checks", arr}}.dump(2) + "\n", out);
  } else {
    os << (all ? "all checks passed" : "verification FAILED") << '\n';
    write_output(cfg, os.str(), out);
  }
  return all ? kOk : kVerificationFailure;
}

int run_bounds(const RunConfig& cfg, std::ostream& out) {
  std::vector<VolumeRecord> vols;
  if (!cfg.volumes.empty()) vols = ingest_volumes(cfg.volumes);
  long lo = cfg.ns.empty() ? 7 : cfg.ns.front();
  long hi = cfg.ns.empty() ? cfg.max_n : cfg.ns.back();
  if (hi < 7) throw RangeError("bounds: need n >= 7");
  std::string csv = bounds_csv(lo, hi, vols);
  if (cfg.format == Format::kJson) {
    json arr = json::array();
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line)) {
      std::vector<std::string> f;
      std::stringstream ls(line);
      for (std::string cell; std::getline(ls, cell, ',');) f.push_back(cell);
      json row = {{"n", std::stol(f[0])},
                  {"lower", std::stod(f[1])},
                  {"upper", std::stod(f[2])},
                  {"curve_k2", std::stod(f[3])},
                  {"curve_k3", std::stod(f[4])},
                  {"curve_k4", std::stod(f[5])}};
      if (f.size() > 6 && !f[6].empty()) row["vol_rel"] = std::stod(f[6]);
      arr.push_back(row);
    }
    write_output(cfg, arr.dump(2) + "\n", out);
  } else {
    write_output(cfg, csv, out);
  }
  return kOk;
}

int run_correlate(const RunConfig& cfg, std::ostream& out) {
  if (cfg.volumes.empty()) throw RangeError("correlate requires --volumes PATH");
  long k = cfg.k > 0 ? cfg.k : 2;
  CorrelationReport rep = correlation_report(k, ingest_volumes(cfg.volumes));
  int dg = precision_digits();
  switch (cfg.format) {
    case Format::kCsv: write_output(cfg, rep.scatter_csv, out); break;
    case Format::kJson:
      write_output(cfg,
                   json{{"k", k}, {"pearson_r", rep.pearson_r}, {"degenerate", rep.degenerate},
                        {"scatter_csv", rep.scatter_csv}}
                           .dump(2) + "\n",
                   out);
      break;
    default:
      write_output(cfg,
                   "k=" + std::to_string(k) + " pearson_r=" + real(rep.pearson_r, dg) +
                       (rep.degenerate ? " (degenerate variance; r undefined, reported as 0)" : "") +
                       "\n",
                   out);
  }
  return kOk;
}

}  // namespace

std::optional<Command> parse_command(const std::string& name) {
  auto it = command_names().find(name);
  if (it == command_names().end()) return std::nullopt;
  return it->second;
}

std::optional<std::pair<long, long>> parse_range(const std::string& text) {
  auto dots = text.find("..");
  if (dots == std::string::npos) return std::nullopt;
  try {
    std::size_t ua = 0, ub = 0;
    std::string a = text.substr(0, dots), b = text.substr(dots + 2);
    long lo = std::stol(a, &ua), hi = std::stol(b, &ub);
    if (ua != a.size() || ub != b.size() || lo > hi) return std::nullopt;
    return std::make_pair(lo, hi);
  } catch (const std::logic_error&) {
    return std::nullopt;
  }
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.command == Command::kVerifyAll) return run_verify(cfg, out);
    if (cfg.command == Command::kBounds) return run_bounds(cfg, out);
    if (cfg.command == Command::kCorrelate) return run_correlate(cfg, out);

    if (cfg.ns.empty()) {
      err << "error: -n or --range is required\n";
      return kUsageError;
    }
    std::vector<long> ns;
    std::vector<long> skipped;
    for (long n : cfg.ns) {
      if (n < 1) {
        err << "error: n must be positive\n";
        return kUsageError;
      }
      if (knot_only(cfg.command) && n % 3 == 0)
        skipped.push_back(n);
      else
        ns.push_back(n);
    }
    if (!skipped.empty()) {
      err << "note: skipped " << skipped.size() << " value(s) with gcd(3,n) != 1 (links):";
      for (long n : skipped) err << ' ' << n;
      err << '\n';
    }
    if (ns.empty()) {
      err << "error: no admissible n\n";
      return kUsageError;
    }
    const bool single = ns.size() == 1;
    if (cfg.format == Format::kSvg && (cfg.command != Command::kKhovanov || !single)) {
      err << "error: svg output is available for khovanov with a single n\n";
      return kUsageError;
    }

    std::ostringstream notes;
    std::function<Piece(long)> fn;
    switch (cfg.command) {
      case Command::kHecke: fn = [&](long n) { return hecke_piece(cfg, n, notes); }; break;
      case Command::kJones: fn = [&](long n) { return jones_piece(cfg, n, single, notes); }; break;
      case Command::kAlexander: fn = [&](long n) { return alexander_piece(n, single); }; break;
      case Command::kHomfly: fn = [&](long n) { return homfly_piece(n, single); }; break;
      case Command::kKhovanov: fn = [&](long n) { return khovanov_piece(n, single); }; break;
      case Command::kIntegralKhovanov: fn = [&](long n) { return integral_piece(n, single); }; break;
      case Command::kStats: fn = [](long n) { return stats_piece(n); }; break;
      case Command::kTwist: fn = [&](long n) { return twist_piece(cfg, n); }; break;
      default: return kUsageError;
    }
    // The oracle notes stream is shared; keep it single-threaded when used.
    unsigned jobs = cfg.oracle ? 1 : cfg.jobs;
    std::vector<Piece> pieces = compute_all(ns, jobs, fn);
    err << notes.str();

    bool ok = true;
    std::string data;
    switch (cfg.format) {
      case Format::kText:
        for (const auto& p : pieces) data += p.text;
        break;
      case Format::kCsv:
        data = csv_header_for(cfg.command, single) + "\n";
        for (const auto& p : pieces) data += p.csv;
        break;
      case Format::kJson:
        if (single) {
          data = pieces.front().js.dump(2) + "\n";
        } else {
          json arr = json::array();
          for (const auto& p : pieces) arr.push_back(p.js);
          data = arr.dump(2) + "\n";
        }
        break;
      case Format::kSvg: data = pieces.front().svg; break;
    }
    for (const auto& p : pieces) ok = ok && p.ok;
    write_output(cfg, data, out);
    return ok ? kOk : kVerificationFailure;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const MissingData& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const RangeError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kVerificationFailure;
  }
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariants of the weaving knots W(3,n)", "weavekit"};
  std::string command, range, format = "text";
  std::optional<long> n;
  RunConfig cfg;
  std::vector<std::string> names;
  for (const auto& [k, v] : command_names()) names.push_back(k);
  app.add_option("command", command, "Subcommand")->required()->check(CLI::IsMember(names));
  app.add_option("-n", n, "Braid power");
  app.add_option("--range", range, "Inclusive range A..B");
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv", "svg"}));
  app.add_option("--out", cfg.out, "Write output to PATH");
  app.add_flag("--conjectural", cfg.conjectural, "Include fitted (unproved) twist formulas");
  app.add_flag("--oracle", cfg.oracle, "Cross-check against the independent oracle");
  app.add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--volumes", cfg.volumes, "CSV file with header n,volume");
  app.add_option("--max-n", cfg.max_n, "Upper limit for verify-all and bounds")
      ->check(CLI::PositiveNumber);
  app.add_option("-k", cfg.k, "Twist index")->check(CLI::PositiveNumber);
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kUsageError;
  }
  cfg.command = *parse_command(command);
  if (n && !range.empty()) {
    err << "usage error: -n and --range are exclusive\n";
    return kUsageError;
  }
  if (n) cfg.ns = {*n};
  if (!range.empty()) {
    auto r = parse_range(range);
    if (!r) {
      err << "usage error: --range expects A..B\n";
      return kUsageError;
    }
    for (long k = r->first; k <= r->second; ++k) cfg.ns.push_back(k);
  }
  static const std::map<std::string, Format> fm = {
      {"text", Format::kText}, {"json", Format::kJson}, {"csv", Format::kCsv}, {"svg", Format::kSvg}};
  cfg.format = fm.at(format);
  return run(cfg, out, err);
}

}  // namespace weavekit
