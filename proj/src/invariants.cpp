#include "weavekit/invariants.hpp"

#include <numeric>

#include "weavekit/errors.hpp"

namespace weavekit {

bool WeaveId::is_knot() const { return std::gcd(p, n) == 1; }

DiagramCounts diagram_counts(const WeaveId& w) {
  if (w.p < 3) throw RangeError("diagram_counts: p must be >= 3");
  const long k = w.p / 2;
  DiagramCounts d;
  if (w.p % 2 == 1) {
    d.crossings = 2 * k * w.n;
    d.positives = k * w.n;
    d.negatives = k * w.n;
    d.a_circles = 1 + k * w.n;
  } else {
    d.crossings = (2 * k - 1) * w.n;
    d.positives = k * w.n;
    d.negatives = (k - 1) * w.n;
    d.a_circles = (k - 1) * w.n + 2;
  }
  return d;
}

long signature_alternating(long o, long y) { return o - y - 1; }

long signature(const WeaveId& w) {
  if (w.p < 2 || w.n < 1) throw RangeError("signature: need p >= 2, n >= 1");
  return w.p % 2 == 1 ? 0 : -w.n + 1;
}

long rasmussen_s(const WeaveId& w) { return signature(w); }

LaurentPoly jones_from(const HeckeCoeffs& h) {
  const LaurentPoly one_plus_t(0, {1, 1});
  LaurentPoly body = one_plus_t * one_plus_t * h.c0;
  body += shifted(one_plus_t * (h.c1 + h.c2), 2);
  body += shifted(h.c12 + h.c21, 4);
  return shifted(body, -h.n - 1);
}

LaurentPoly jones(long n) { return jones_from(coeffs(n)); }

LaurentPoly alexander_from(const HeckeCoeffs& h) { return shifted(h.c12 + h.c21, -h.n + 1); }

LaurentPoly alexander(long n) { return alexander_from(coeffs(n)); }

long seifert_genus(long n) {
  if (n < 1 || n % 3 == 0) throw RangeError("seifert_genus: need gcd(3,n) = 1");
  LaurentPoly d = alexander(n);
  if (abs(d.coeffs().back()) != 1)
    throw InvariantViolation("Alexander polynomial is not monic");
  return d.span() / 2;
}

namespace {

const LaurentPoly& one_minus_s2() {
  static const LaurentPoly p(0, {1, 0, -1});
  return p;
}

// Rewrites a Laurent polynomial in s, symmetric under s -> -1/s, as a
// polynomial in z = s^-1 - s.
LaurentPoly to_z_basis(LaurentPoly p) {
  std::vector<BigInt> out;
  const LaurentPoly z(-1, {1, 0, -1});
  while (!p.is_zero()) {
    long d = p.highest_exp();
    if (p.lowest_exp() != -d || d < 0)
      throw ChangeOfVariablesError("coefficient is not symmetric in s");
    BigInt c = p.coefficient(-d);
    BigInt expect_top = (d % 2 == 0) ? c : BigInt(-c);
    if (p.coefficient(d) != expect_top)
      throw ChangeOfVariablesError("coefficient is not symmetric in s");
    LaurentPoly zd(0, {1});
    for (long k = 0; k < d; ++k) zd = zd * z;
    p -= c * zd;
    if (out.size() < static_cast<std::size_t>(d + 1)) out.resize(static_cast<std::size_t>(d + 1));
    out[static_cast<std::size_t>(d)] = c;
  }
  return LaurentPoly(0, std::move(out));
}

LaurentPoly in_s(const LaurentPoly& q_poly) { return substitute_power(q_poly, 2); }

}  // namespace

BiLaurentPoly homfly_from(const HeckeCoeffs& h) {
  // With l = ia, m = iz the Hecke output has the form
  //   q^(1-n) [ C0 (1-a^2)^2 / (a^2 (1-q)^2) + (C1+C2)(1-a^2)/(1-q) + (C12+C21) a^2 ].
  const LaurentPoly c0 = in_s(h.c0);
  const LaurentPoly c1p2 = in_s(h.c1 + h.c2) * one_minus_s2();
  const LaurentPoly c12p21 = in_s(h.c12 + h.c21) * one_minus_s2() * one_minus_s2();
  std::map<long, LaurentPoly> num;
  num[-2] = c0;
  num[0] = c1p2 - c0 - c0;
  num[2] = c0 - c1p2 + c12p21;
  const LaurentPoly den = one_minus_s2() * one_minus_s2();
  std::map<long, LaurentPoly> rows;
  for (auto& [e, p] : num) {
    LaurentPoly r;
    try {
      r = exact_div(p, den);
    } catch (const NonDivisible&) {
      throw ChangeOfVariablesError("HOMFLY coefficient of a^" + std::to_string(e) +
                                   " is not a Laurent polynomial");
    }
    r = shifted(r, 2 - 2 * h.n);
    if (!r.is_zero()) rows[e] = to_z_basis(r);
  }
  return BiLaurentPoly::from_rows(rows);
}

BiLaurentPoly homfly(long n) { return homfly_from(coeffs(n)); }

namespace {

LaurentPoly specialize(const BiLaurentPoly& h, bool keep_a) {
  const LaurentPoly z2(-1, {1, -2, 1});
  LaurentPoly out;
  for (const auto& [k, c] : h.terms()) {
    auto [ea, ez] = k;
    if (ez % 2 != 0 || ez < 0)
      throw ChangeOfVariablesError("odd or negative power of z in a knot polynomial");
    LaurentPoly term = LaurentPoly::monomial(c, keep_a ? ea : 0);
    for (long j = 0; j < ez / 2; ++j) term = term * z2;
    out += term;
  }
  return out;
}

}  // namespace

LaurentPoly homfly_to_jones(const BiLaurentPoly& h) { return specialize(h, true); }

LaurentPoly homfly_to_alexander(const BiLaurentPoly& h) { return specialize(h, false); }

BigInt jones_coefficient_formulas(long n, long k) {
  static const long threshold[4] = {2, 3, 5, 5};
  if (k < 0 || k > 3) throw RangeError("jones_coefficient_formulas: k must be 0..3");
  if (n < threshold[k])
    throw RangeError("jones_coefficient_formulas: n=" + std::to_string(n) +
                     " below threshold for k=" + std::to_string(k));
  const BigInt N(n);
  const BigInt sn = (n % 2 == 0) ? 1 : -1;
  switch (k) {
    case 0: return sn;
    case 1: return -sn * N;
    case 2: return sn * N * (N - 1) / 2;
    default: return -sn * (N * (N - 1) * (N - 2) / 6 + N);
  }
}

}  // namespace weavekit
