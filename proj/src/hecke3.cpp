#include "weavekit/hecke3.hpp"

#include <array>
#include <map>

#include "weavekit/errors.hpp"

namespace weavekit {

namespace {

LaurentPoly times_q(const LaurentPoly& p) { return shifted(p, 1); }
LaurentPoly times_qm1(const LaurentPoly& p) { return shifted(p, 1) - p; }

BigInt sign_pow(long e) { return (e % 2 == 0) ? BigInt(1) : BigInt(-1); }

}  // namespace

HeckeCoeffs initial_coeffs() {
  HeckeCoeffs h;
  h.n = 1;
  h.c1 = LaurentPoly(0, {1, -1});
  h.c12 = LaurentPoly(0, {1});
  return h;
}

HeckeCoeffs step(const HeckeCoeffs& prev) {
  LaurentPoly c121 = prev.c2 + times_qm1(prev.c21);
  if (!c121.is_zero())
    throw RecursionInvariantViolated("T1T2T1 coordinate nonzero at n=" + std::to_string(prev.n + 1));
  HeckeCoeffs h;
  h.n = prev.n + 1;
  LaurentPoly qm1_c1 = times_qm1(prev.c1);
  h.c0 = shifted(prev.c21, 2) - times_q(qm1_c1);
  h.c1 = -times_qm1(qm1_c1) - times_qm1(prev.c0);
  h.c2 = times_q(prev.c1);
  h.c12 = qm1_c1 + prev.c0;
  h.c21 = times_q(prev.c12) - times_qm1(prev.c2) - times_qm1(times_qm1(prev.c21));
  return h;
}

HeckeCoeffs coeffs(long n) {
  if (n < 1) throw RangeError("coeffs: n must be >= 1");
  HeckeCoeffs h = initial_coeffs();
  while (h.n < n) h = step(h);
  return h;
}

namespace {

// Elements of H_3 as linear combinations of words in the letters '1', '2'.
using Element = std::map<std::string, LaurentPoly>;

const std::array<std::string, 6> kBasis = {"", "1", "2", "12", "21", "121"};

void add_to(Element& e, const std::string& w, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto& slot = e[w];
  slot += c;
  if (slot.is_zero()) e.erase(w);
}

// Rewrites T_i^2 = (q-1)T_i + q and T2T1T2 = T1T2T1 until no rule applies.
Element reduce(Element e) {
  for (int guard = 0; guard < 10000; ++guard) {
    bool changed = false;
    Element next;
    for (const auto& [w, c] : e) {
      std::size_t pos = std::string::npos;
      std::size_t len = 0;
      for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        if (w[i] == w[i + 1]) {
          pos = i;
          len = 2;
          break;
        }
        if (i + 2 < w.size() && w.compare(i, 3, "212") == 0) {
          pos = i;
          len = 3;
          break;
        }
      }
      if (pos == std::string::npos) {
        add_to(next, w, c);
        continue;
      }
      changed = true;
      std::string pre = w.substr(0, pos), post = w.substr(pos + len);
      if (len == 3) {
        add_to(next, pre + "121" + post, c);
      } else {
        std::string letter(1, w[pos]);
        add_to(next, pre + letter + post, times_qm1(c));
        add_to(next, pre + post, times_q(c));
      }
    }
    e = std::move(next);
    if (!changed) return e;
  }
  throw OracleBasisError("word rewriting did not terminate");
}

using Matrix = std::array<std::array<LaurentPoly, 6>, 6>;

// Row b holds the coordinates of basis[b] * g.
Matrix right_multiplication(const Element& g) {
  Matrix m;
  for (std::size_t b = 0; b < 6; ++b) {
    Element prod;
    for (const auto& [w, c] : g) add_to(prod, kBasis[b] + w, c);
    prod = reduce(prod);
    for (const auto& [w, c] : prod) {
      std::size_t idx = 6;
      for (std::size_t k = 0; k < 6; ++k)
        if (kBasis[k] == w) idx = k;
      if (idx == 6) throw OracleBasisError("word '" + w + "' outside the basis");
      m[b][idx] = c;
    }
  }
  return m;
}

std::array<LaurentPoly, 6> vec_mat(const std::array<LaurentPoly, 6>& v, const Matrix& m) {
  std::array<LaurentPoly, 6> out;
  for (std::size_t b = 0; b < 6; ++b) {
    if (v[b].is_zero()) continue;
    for (std::size_t k = 0; k < 6; ++k)
      if (!m[b][k].is_zero()) out[k] += v[b] * m[b][k];
  }
  return out;
}

}  // namespace

HeckeCoeffs oracle_matrix_power(long n) {
  if (n < 1) throw RangeError("oracle_matrix_power: n must be >= 1");
  const LaurentPoly one(0, {1});
  // q * T2^-1 = T2 - (q-1)
  Matrix m1 = right_multiplication({{"1", one}});
  Matrix m2 = right_multiplication({{"2", one}, {"", LaurentPoly(0, {1, -1})}});
  std::array<LaurentPoly, 6> v;
  v[0] = one;
  for (long k = 0; k < n; ++k) v = vec_mat(vec_mat(v, m1), m2);
  if (!v[5].is_zero()) throw OracleBasisError("T1T2T1 coordinate nonzero");
  // The coefficient polynomials are those of q^n (T1 T2^-1)^n; the global
  // q^-n is a unit and is kept outside.
  HeckeCoeffs h;
  h.n = n;
  h.c0 = v[0];
  h.c1 = v[1];
  h.c2 = v[2];
  h.c12 = v[3];
  h.c21 = v[4];
  for (const auto* p : {&h.c0, &h.c1, &h.c2, &h.c12, &h.c21})
    if (!p->is_zero() && p->lowest_exp() < 0) throw OracleBasisError("negative power of q");
  return h;
}

bool StructureReport::all_passed() const {
  for (const auto& it : items)
    if (!it.passed) return false;
  return true;
}

StructureReport check_structure(const HeckeCoeffs& h) {
  if (h.n < 2) throw RangeError("check_structure: n must be >= 2");
  const long n = h.n;
  StructureReport rep;
  rep.n = n;
  auto expect = [&](const std::string& name, const BigInt& got, const BigInt& want) {
    rep.items.push_back({name, got == want, "got " + got.get_str() + ", expected " + want.get_str()});
  };
  struct Named {
    const char* name;
    const LaurentPoly* p;
  };
  const std::array<Named, 5> polys = {{{"C0", &h.c0}, {"C1", &h.c1}, {"C2", &h.c2},
                                       {"C12", &h.c12}, {"C21", &h.c21}}};

  const BigInt sn = sign_pow(n), sn1 = sign_pow(n - 1);
  const std::array<BigInt, 5> trailing = {0, sn1, 0, sn1, 0};
  const std::array<BigInt, 5> deg_one = {sn, sn * (n + 1), sn, sn * n, sn};
  const std::array<long, 5> degrees = {2 * n - 1, 2 * n - 1, 2 * n - 2, 2 * n - 2, 2 * n - 3};
  // p(q) = sign * q^d * p(1/q)
  const std::array<long, 5> pal_d = {2 * n, 2 * n - 1, 2 * n - 1, 2 * n - 2, 2 * n - 2};
  const std::array<int, 5> pal_sign = {1, -1, -1, 1, 1};

  for (std::size_t k = 0; k < 5; ++k)
    expect(std::string("trailing ") + polys[k].name, polys[k].p->coefficient(0), trailing[k]);
  for (std::size_t k = 0; k < 5; ++k)
    expect(std::string("degree-one ") + polys[k].name, polys[k].p->coefficient(1), deg_one[k]);
  for (std::size_t k = 0; k < 5; ++k) {
    bool ok = is_palindromic(*polys[k].p, pal_d[k], pal_sign[k]);
    rep.items.push_back({std::string("palindrome ") + polys[k].name, ok,
                         std::string(pal_sign[k] > 0 ? "+" : "-") + "q^" + std::to_string(pal_d[k])});
  }
  for (std::size_t k = 0; k < 5; ++k) {
    long got = polys[k].p->is_zero() ? -1 : polys[k].p->highest_exp();
    bool ok = got == degrees[k] && !polys[k].p->is_zero() && polys[k].p->lowest_exp() >= 0;
    rep.items.push_back({std::string("degree ") + polys[k].name, ok,
                         "got " + std::to_string(got) + ", expected " + std::to_string(degrees[k])});
  }
  return rep;
}

SecondOrderCoeffs second_order_coeffs(long n) {
  if (n < 3) throw RangeError("second_order_coeffs: n must be >= 3");
  SecondOrderCoeffs r;
  const BigInt sn = sign_pow(n), sn1 = sign_pow(n - 1);
  const BigInt N(n);
  r.c_n_0_2 = sn1 * (N + 1);
  r.c_n_21_2 = sn1 * (N - 1);
  if (n >= 4) {
    r.c_n_1_2 = sn1 * (N * (N + 1) / 2 + 1);
    r.c_n_1_3 = sn * (N * (N - 1) * (N + 1) / 6 + 2 * N - 2);
  }
  if (n >= 5) r.c_n_0_3 = sn * (N * (N - 1) / 2 + N);
  return r;
}

bool check_second_order(const HeckeCoeffs& h) {
  SecondOrderCoeffs r = second_order_coeffs(h.n);
  auto ok = [](const std::optional<BigInt>& v, const LaurentPoly& p, long k) {
    return !v || *v == p.coefficient(k);
  };
  return ok(r.c_n_0_2, h.c0, 2) && ok(r.c_n_0_3, h.c0, 3) && ok(r.c_n_1_2, h.c1, 2) &&
         ok(r.c_n_1_3, h.c1, 3) && ok(r.c_n_21_2, h.c21, 2);
}

nlohmann::json to_json(const HeckeCoeffs& h) {
  return {{"n", h.n},
          {"C0", to_json(h.c0)},
          {"C1", to_json(h.c1)},
          {"C2", to_json(h.c2)},
          {"C12", to_json(h.c12)},
          {"C21", to_json(h.c21)}};
}

}  // namespace weavekit
