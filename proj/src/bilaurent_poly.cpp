#include "weavekit/bilaurent_poly.hpp"

#include <limits>

#include "weavekit/errors.hpp"

namespace weavekit {

BiLaurentPoly BiLaurentPoly::from_rows(const std::map<long, LaurentPoly>& rows) {
  BiLaurentPoly out;
  for (const auto& [e1, p] : rows)
    for (std::size_t k = 0; k < p.coeffs().size(); ++k)
      out.add_term(e1, p.lowest_exp() + static_cast<long>(k), p.coeffs()[k]);
  return out;
}

BigInt BiLaurentPoly::coefficient(long e1, long e2) const {
  auto it = terms_.find({e1, e2});
  return it == terms_.end() ? BigInt(0) : it->second;
}

LaurentPoly BiLaurentPoly::row(long e1) const {
  LaurentPoly out;
  for (auto it = terms_.lower_bound({e1, std::numeric_limits<long>::min()});
       it != terms_.end() && it->first.first == e1; ++it)
    out += LaurentPoly::monomial(it->second, it->first.second);
  return out;
}

std::vector<long> BiLaurentPoly::row_exponents() const {
  std::vector<long> out;
  for (const auto& [k, c] : terms_)
    if (out.empty() || out.back() != k.first) out.push_back(k.first);
  return out;
}

void BiLaurentPoly::add_term(long e1, long e2, const BigInt& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace({e1, e2}, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

BiLaurentPoly& BiLaurentPoly::operator+=(const BiLaurentPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
  return *this;
}

BiLaurentPoly& BiLaurentPoly::operator-=(const BiLaurentPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
  return *this;
}

BiLaurentPoly operator*(const BiLaurentPoly& a, const BiLaurentPoly& b) {
  BiLaurentPoly out;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_)
      out.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
  return out;
}

std::string to_string(const BiLaurentPoly& p, std::string_view v1, std::string_view v2) {
  if (p.is_zero()) return "0";
  auto exps = p.row_exponents();
  std::string out;
  for (auto it = exps.rbegin(); it != exps.rend(); ++it) {
    if (!out.empty()) out += " + ";
    if (*it != 0) {
      out += v1;
      if (*it != 1) out += "^" + std::to_string(*it);
    }
    out += "(" + to_string(p.row(*it), v2) + ")";
  }
  return out;
}

nlohmann::json to_json(const BiLaurentPoly& p) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [k, c] : p.terms())
    out.push_back({{"e1", k.first}, {"e2", k.second}, {"c", c.get_str()}});
  return out;
}

BiLaurentPoly bilaurent_from_json(const nlohmann::json& j) {
  BiLaurentPoly out;
  try {
    for (const auto& t : j)
      out.add_term(t.at("e1").get<long>(), t.at("e2").get<long>(),
                   BigInt(t.at("c").get<std::string>()));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  return out;
}

}  // namespace weavekit
