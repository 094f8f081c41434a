#include "weavekit/laurent_poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "weavekit/errors.hpp"

namespace weavekit {

LaurentPoly::LaurentPoly(long lowest_exp, std::vector<BigInt> coeffs)
    : lowest_(lowest_exp), coeffs_(std::move(coeffs)) {
  trim();
}

LaurentPoly::LaurentPoly(long lowest_exp, std::initializer_list<long> coeffs)
    : lowest_(lowest_exp) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

LaurentPoly LaurentPoly::constant(const BigInt& c) { return monomial(c, 0); }

LaurentPoly LaurentPoly::monomial(const BigInt& c, long exp) {
  return LaurentPoly(exp, std::vector<BigInt>{c});
}

void LaurentPoly::trim() {
  std::size_t lo = 0;
  while (lo < coeffs_.size() && sgn(coeffs_[lo]) == 0) ++lo;
  if (lo == coeffs_.size()) {
    coeffs_.clear();
    lowest_ = 0;
    return;
  }
  std::size_t hi = coeffs_.size();
  while (sgn(coeffs_[hi - 1]) == 0) --hi;
  coeffs_.erase(coeffs_.begin() + static_cast<long>(hi), coeffs_.end());
  if (lo) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lo));
    lowest_ += static_cast<long>(lo);
  }
}

BigInt LaurentPoly::coefficient(long k) const {
  if (is_zero() || k < lowest_ || k > highest_exp()) return 0;
  return coeffs_[static_cast<std::size_t>(k - lowest_)];
}

long LaurentPoly::span() const { return is_zero() ? 0 : highest_exp() - lowest_; }

std::size_t LaurentPoly::max_bits() const {
  std::size_t b = 0;
  for (const auto& c : coeffs_) b = std::max(b, mpz_sizeinbase(c.get_mpz_t(), 2));
  return b;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

namespace {

// a += sign * b
void accumulate(long& a_low, std::vector<BigInt>& a, long b_low,
                const std::vector<BigInt>& b, bool negate) {
  if (b.empty()) return;
  if (a.empty()) {
    a_low = b_low;
    a = b;
    if (negate)
      for (auto& c : a) c = -c;
    return;
  }
  long lo = std::min(a_low, b_low);
  long hi = std::max(a_low + static_cast<long>(a.size()), b_low + static_cast<long>(b.size()));
  if (lo < a_low) a.insert(a.begin(), static_cast<std::size_t>(a_low - lo), BigInt(0));
  a.resize(static_cast<std::size_t>(hi - lo));
  std::size_t off = static_cast<std::size_t>(b_low - lo);
  for (std::size_t k = 0; k < b.size(); ++k) {
    if (negate)
      a[off + k] -= b[k];
    else
      a[off + k] += b[k];
  }
  a_low = lo;
}

}  // namespace

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  accumulate(lowest_, coeffs_, o.lowest_, o.coeffs_, false);
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  accumulate(lowest_, coeffs_, o.lowest_, o.coeffs_, true);
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const BigInt& c) {
  if (sgn(c) == 0) {
    coeffs_.clear();
    lowest_ = 0;
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
  }
  return LaurentPoly(a.lowest_ + b.lowest_, std::move(out));
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  return a.lowest_ == b.lowest_ && a.coeffs_ == b.coeffs_;
}

LaurentPoly shifted(const LaurentPoly& p, long k) {
  if (p.is_zero()) return p;
  return LaurentPoly(p.lowest_exp() + k, p.coeffs());
}

LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& d) {
  if (d.is_zero()) throw NonDivisible("division by the zero polynomial");
  if (p.is_zero()) return {};
  // Both operands have nonzero constant term after factoring out x^lowest,
  // so ordinary long division from the top decides divisibility.
  std::vector<BigInt> rem = p.coeffs();
  const auto& dv = d.coeffs();
  if (rem.size() < dv.size()) throw NonDivisible("divisor has larger span than dividend");
  const std::size_t qn = rem.size() - dv.size() + 1;
  std::vector<BigInt> quot(qn);
  const BigInt& lead = dv.back();
  for (std::size_t s = qn; s-- > 0;) {
    BigInt& top = rem[s + dv.size() - 1];
    if (sgn(top) == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
      throw NonDivisible("leading coefficient does not divide");
    BigInt c = top / lead;
    for (std::size_t k = 0; k < dv.size(); ++k)
      mpz_submul(rem[s + k].get_mpz_t(), c.get_mpz_t(), dv[k].get_mpz_t());
    quot[s] = std::move(c);
  }
  for (const auto& r : rem)
    if (sgn(r) != 0) throw NonDivisible("nonzero remainder");
  return LaurentPoly(p.lowest_exp() - d.lowest_exp(), std::move(quot));
}

LaurentPoly substitute_power(const LaurentPoly& p, long k) {
  if (k == 0) throw RangeError("substitute_power: k must be nonzero");
  if (p.is_zero() || k == 1) return p;
  const auto& c = p.coeffs();
  long ak = k < 0 ? -k : k;
  std::vector<BigInt> out(static_cast<std::size_t>(p.span() * ak + 1));
  for (std::size_t i = 0; i < c.size(); ++i) {
    std::size_t pos = k > 0 ? i * static_cast<std::size_t>(ak)
                            : (c.size() - 1 - i) * static_cast<std::size_t>(ak);
    out[pos] = c[i];
  }
  long low = k > 0 ? p.lowest_exp() * k : p.highest_exp() * k;
  return LaurentPoly(low, std::move(out));
}

LaurentPoly alternate_signs(const LaurentPoly& p) {
  std::vector<BigInt> out = p.coeffs();
  for (std::size_t i = 0; i < out.size(); ++i) {
    long e = p.lowest_exp() + static_cast<long>(i);
    if (e % 2 != 0) out[i] = -out[i];
  }
  return LaurentPoly(p.lowest_exp(), std::move(out));
}

LaurentPoly deflate(const LaurentPoly& p, long k) {
  if (k <= 0) throw RangeError("deflate: k must be positive");
  if (p.is_zero() || k == 1) return p;
  if (p.lowest_exp() % k != 0) throw RangeError("deflate: exponent not divisible");
  const auto& c = p.coeffs();
  std::vector<BigInt> out(static_cast<std::size_t>(p.span() / k + 1));
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (sgn(c[i]) == 0) continue;
    if (i % static_cast<std::size_t>(k) != 0) throw RangeError("deflate: exponent not divisible");
    out[i / static_cast<std::size_t>(k)] = c[i];
  }
  return LaurentPoly(p.lowest_exp() / k, std::move(out));
}

bool is_palindromic(const LaurentPoly& p, long d, int sign) {
  LaurentPoly mirror = shifted(substitute_power(p, -1), d);
  if (sign < 0) mirror = -mirror;
  return p == mirror;
}

BigInt coefficient(const LaurentPoly& p, long k) { return p.coefficient(k); }

long span(const LaurentPoly& p) { return p.span(); }

Rational eval_rational(const LaurentPoly& p, const Rational& x) {
  if (p.is_zero()) return 0;
  Rational acc = 0;
  const auto& c = p.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + Rational(c[i]);
  long e = p.lowest_exp();
  if (e != 0) {
    if (sgn(x) == 0) throw RangeError("eval_rational: negative power of zero");
    Rational base = e > 0 ? x : Rational(1) / x;
    mpz_pow_ui(base.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(e > 0 ? e : -e));
    mpz_pow_ui(base.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(e > 0 ? e : -e));
    base.canonicalize();
    acc *= base;
  }
  return acc;
}

std::string to_string(const LaurentPoly& p, std::string_view var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const auto& c = p.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    const BigInt& v = c[i];
    if (sgn(v) == 0) continue;
    long e = p.lowest_exp() + static_cast<long>(i);
    BigInt mag = abs(v);
    if (first) {
      if (sgn(v) < 0) os << '-';
    } else {
      os << (sgn(v) < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0 || mag != 1) os << mag.get_str();
    if (e != 0) {
      os << var;
      if (e != 1) os << '^' << e;
    }
  }
  return os.str();
}

LaurentPoly parse_laurent(std::string_view text, std::string_view var) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch)) && ch != '*' && ch != '{' && ch != '}' &&
        ch != '\\' && ch != ',')
      s.push_back(ch);
  if (s.empty()) throw ParseError("empty polynomial");
  if (s == "0") return {};
  LaurentPoly out;
  std::size_t i = 0;
  auto read_int = [&](std::string& dst) {
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) dst.push_back(s[i++]);
  };
  while (i < s.size()) {
    bool neg = false;
    if (s[i] == '+' || s[i] == '-') {
      neg = s[i] == '-';
      ++i;
    } else if (i != 0) {
      throw ParseError("expected sign at offset " + std::to_string(i));
    }
    std::string digits;
    read_int(digits);
    long e = 0;
    bool has_var = s.compare(i, var.size(), var) == 0;
    if (has_var) {
      i += var.size();
      e = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::string ed;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) ed.push_back(s[i++]);
        read_int(ed);
        if (ed.empty() || ed == "-" || ed == "+") throw ParseError("bad exponent");
        e = std::stol(ed);
      }
    }
    if (digits.empty() && !has_var) throw ParseError("empty term in '" + std::string(text) + "'");
    BigInt c = digits.empty() ? BigInt(1) : BigInt(digits);
    if (neg) c = -c;
    out += LaurentPoly::monomial(c, e);
  }
  return out;
}

nlohmann::json to_json(const LaurentPoly& p) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(c.get_str());
  return {{"lowest_exp", p.lowest_exp()}, {"coeffs", coeffs}};
}

LaurentPoly laurent_from_json(const nlohmann::json& j) {
  try {
    std::vector<BigInt> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.emplace_back(c.get<std::string>());
    return LaurentPoly(j.at("lowest_exp").get<long>(), std::move(coeffs));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

}  // namespace weavekit
