#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "weavekit/laurent_poly.hpp"

namespace weavekit {

/// Two-variable Laurent polynomial, sparse. No zero coefficient is stored.
class BiLaurentPoly {
 public:
  using Key = std::pair<long, long>;
  using Terms = std::map<Key, BigInt>;

  BiLaurentPoly() = default;

  /// Sum of x1^e1 * p(x2) over the given rows.
  static BiLaurentPoly from_rows(const std::map<long, LaurentPoly>& rows);

  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  BigInt coefficient(long e1, long e2) const;
  /// Coefficient of x1^e1 as a polynomial in x2.
  LaurentPoly row(long e1) const;
  /// Exponents of x1 with a nonzero row, ascending.
  std::vector<long> row_exponents() const;

  void add_term(long e1, long e2, const BigInt& c);

  BiLaurentPoly& operator+=(const BiLaurentPoly& o);
  BiLaurentPoly& operator-=(const BiLaurentPoly& o);
  friend BiLaurentPoly operator+(BiLaurentPoly a, const BiLaurentPoly& b) { return a += b; }
  friend BiLaurentPoly operator-(BiLaurentPoly a, const BiLaurentPoly& b) { return a -= b; }
  friend BiLaurentPoly operator*(const BiLaurentPoly& a, const BiLaurentPoly& b);
  friend bool operator==(const BiLaurentPoly& a, const BiLaurentPoly& b) {
    return a.terms_ == b.terms_;
  }

 private:
  Terms terms_;
};

/// Rows by descending x1 power, e.g. "a^2(z^4 + z^2 - 1) + (...) + a^-2(...)".
std::string to_string(const BiLaurentPoly& p, std::string_view v1 = "a",
                      std::string_view v2 = "z");

nlohmann::json to_json(const BiLaurentPoly& p);
BiLaurentPoly bilaurent_from_json(const nlohmann::json& j);

}  // namespace weavekit
