#include "weavekit/khovanov.hpp"

#include <sstream>

#include "weavekit/errors.hpp"
#include "weavekit/invariants.hpp"

namespace weavekit {

BigInt KhTable::dim(long i, long j) const {
  auto it = dims.find({i, j});
  return it == dims.end() ? BigInt(0) : it->second;
}

IntegralEntry IntegralKhTable::at(long i, long j) const {
  auto it = entries.find({i, j});
  return it == entries.end() ? IntegralEntry{0, 0} : it->second;
}

BigInt IntegralKhTable::total_torsion() const {
  BigInt t = 0;
  for (const auto& [k, e] : entries) t += e.two_torsion_exp;
  return t;
}

LaurentPoly kh_prime(const LaurentPoly& v, long sigma) {
  LaurentPoly num = shifted(substitute_power(v, 2), sigma) - LaurentPoly(0, {1});
  LaurentPoly quot = exact_div(num, LaurentPoly(0, {1, 0, -1}));
  LaurentPoly in_u;
  try {
    in_u = deflate(quot, 2);
  } catch (const RangeError&) {
    throw InvariantViolation("kh_prime: odd powers of Q after division");
  }
  LaurentPoly out = alternate_signs(in_u);
  for (const auto& c : out.coeffs())
    if (sgn(c) < 0) throw NegativeCoefficient("kh_prime: negative coefficient");
  return out;
}

namespace {

void bump(KhTable& t, long i, long j, const BigInt& c) {
  if (sgn(c) == 0) return;
  t.dims[{i, j}] += c;
}

}  // namespace

KhTable kh_from_jones(const LaurentPoly& v, long sigma, long n) {
  KhTable t;
  t.n = n;
  t.sigma = sigma;
  LaurentPoly kp = kh_prime(v, sigma);
  bump(t, 0, -1 - sigma, 1);
  bump(t, 0, 1 - sigma, 1);
  for (std::size_t k = 0; k < kp.coeffs().size(); ++k) {
    long i = kp.lowest_exp() + static_cast<long>(k);
    const BigInt& b = kp.coeffs()[k];
    bump(t, i, 2 * i - 1 - sigma, b);
    bump(t, i + 1, 2 * i + 3 - sigma, b);
  }
  return t;
}

KhTable kh_table(long n) {
  if (n < 1 || n % 3 == 0) throw RangeError("kh_table: need gcd(3,n) = 1");
  return kh_from_jones(jones(n), signature({3, n}), n);
}

BettiLine betti_line(const KhTable& kh, BettiConvention conv) {
  BettiLine out;
  const long s = kh.sigma;
  for (const auto& [k, d] : kh.dims) {
    auto [i, j] = k;
    if (sgn(d) == 0) continue;
    if (conv == BettiConvention::kLiteral && j == 2 * i + 1 - s) out.emplace_back(i, d);
    if (conv == BettiConvention::kPublished && j == 2 * i - 1 - s) out.emplace_back(i + 1, d);
  }
  return out;
}

BettiLine betti_line(long n, BettiConvention conv) { return betti_line(kh_table(n), conv); }

IntegralKhTable integral_kh(const KhTable& kh) {
  IntegralKhTable out;
  out.n = kh.n;
  out.sigma = kh.sigma;
  const long s = kh.sigma;
  for (const auto& [k, d] : kh.dims) out.entries[k].free_rank = d;
  for (const auto& [k, d] : kh.dims) {
    auto [i, j] = k;
    if (j != 2 * i - 1 - s) continue;
    // The next spot on the lower line carries the torsion.
    BigInt a = d - (i == 0 ? 1 : 0);
    if (sgn(a) > 0) out.entries[{i + 1, 2 * i + 1 - s}].two_torsion_exp = a;
  }
  return out;
}

IntegralKhTable integral_kh(long n) { return integral_kh(kh_table(n)); }

bool check_support(const KhTable& kh, long p, long n) {
  const long s = signature({p, n});
  for (const auto& [k, d] : kh.dims) {
    if (sgn(d) == 0) continue;
    auto [i, j] = k;
    if (j != 2 * i - s + 1 && j != 2 * i - s - 1) return false;
  }
  return true;
}

bool euler_check(const KhTable& kh, const LaurentPoly& v) {
  LaurentPoly chi;
  for (const auto& [k, d] : kh.dims) {
    auto [i, j] = k;
    chi += LaurentPoly::monomial(i % 2 == 0 ? d : BigInt(-d), j);
  }
  return chi == LaurentPoly(-1, {1, 0, 1}) * substitute_power(v, 2);
}

bool knight_move_check(const KhTable& kh) {
  const long s = kh.sigma;
  long lo = 0, hi = 0;
  for (const auto& [k, d] : kh.dims) {
    lo = std::min(lo, k.first);
    hi = std::max(hi, k.first);
  }
  for (long i = lo - 1; i <= hi; ++i) {
    BigInt a = kh.dim(i, 2 * i - 1 - s) - (i == 0 ? 1 : 0);
    BigInt b = kh.dim(i + 1, 2 * i + 3 - s) - (i + 1 == 0 ? 1 : 0);
    if (a != b) return false;
  }
  return true;
}

std::string to_csv(const KhTable& kh) {
  std::ostringstream os;
  os << "i,j,dim\n";
  for (const auto& [k, d] : kh.dims) os << k.first << ',' << k.second << ',' << d.get_str() << '\n';
  return os.str();
}

std::string to_csv(const IntegralKhTable& kh) {
  std::ostringstream os;
  os << "i,j,free_rank,two_torsion_exp\n";
  for (const auto& [k, e] : kh.entries)
    os << k.first << ',' << k.second << ',' << e.free_rank.get_str() << ','
       << e.two_torsion_exp.get_str() << '\n';
  return os.str();
}

}  // namespace weavekit
