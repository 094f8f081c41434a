#include "doctest.h"
#include "weavekit/errors.hpp"
#include "weavekit/invariants.hpp"
#include "weavekit/khovanov.hpp"
#include "weavekit/reference_data.hpp"

using namespace weavekit;

namespace {

LaurentPoly P(long lo, std::initializer_list<long> cs) { return LaurentPoly(lo, cs); }

std::map<std::pair<long, long>, BigInt> dims(
    std::initializer_list<std::pair<const std::pair<long, long>, BigInt>> init) {
  return std::map<std::pair<long, long>, BigInt>(init);
}

BigInt line_total(const BettiLine& line) {
  BigInt s = 0;
  for (const auto& [i, d] : line) s += d;
  return s;
}

}  // namespace

TEST_SUITE("khovanov") {

TEST_CASE("kh_prime examples") {
  CHECK(kh_prime(jones(2), 0) == P(-2, {1, 0, 0, 1}));
  CHECK(kh_prime(P(0, {1}), 0).is_zero());
  CHECK(kh_prime(jones(4), 0) == P(-4, {1, 3, 3, 4, 4, 3, 3, 1}));
}

TEST_CASE("kh_prime rejects inconsistent input") {
  CHECK_THROWS_AS(kh_prime(P(0, {1}), 2), NegativeCoefficient);
  CHECK_THROWS(kh_prime(P(0, {1, 1}), 0));
}

TEST_CASE("closed form for the figure eight") {
  KhTable kh = kh_table(2);
  CHECK(kh.dims == dims({{{-2, -5}, 1}, {{-1, -1}, 1}, {{0, -1}, 1}, {{0, 1}, 1}, {{1, 1}, 1}, {{2, 5}, 1}}));
  CHECK(kh.dim(5, 5) == 0);
}

TEST_CASE("unknot table") {
  KhTable kh = kh_from_jones(P(0, {1}), 0);
  CHECK(kh.dims == dims({{{0, -1}, 1}, {{0, 1}, 1}}));
  CHECK(euler_check(kh, P(0, {1})));
  CHECK(integral_kh(kh).total_torsion() == 0);
}

TEST_CASE("upper line of W(3,10)") {
  BettiLine line = betti_line(10);
  const auto& want = reference::w310_line();
  REQUIRE(line.size() == want.size());
  for (std::size_t k = 0; k < line.size(); ++k) {
    CHECK(line[k].first == static_cast<long>(k) - 9);
    CHECK(line[k].second == want[k]);
  }
  CHECK(line_total(line) == 7563);
  CHECK(line[9].second == 970);
  CHECK(line[10].second == 971);
}

TEST_CASE("upper line totals") {
  BettiLine l11 = betti_line(11);
  CHECK(line_total(l11) == 19801);
  for (const auto& [i, d] : l11)
    if (i == 0) CHECK(d == 2431);
  BettiLine lit = betti_line(kh_table(2), BettiConvention::kLiteral);
  CHECK(lit == BettiLine{{-1, 1}, {0, 1}, {2, 1}});
}

TEST_CASE("line symmetry for odd p") {
  for (long n : {4, 7, 10, 13, 20}) {
    std::map<long, BigInt> m;
    for (const auto& [i, d] : betti_line(n)) m[i] = d;
    for (const auto& [i, d] : m)
      if (i <= 0) CHECK(m[1 - i] == d + (i == 0 ? 1 : 0));
  }
}

TEST_CASE("integral homology of W(3,4)") {
  IntegralKhTable t = integral_kh(4);
  const auto& want = reference::w34_integral();
  for (const auto& [ij, fr] : want) {
    CAPTURE(ij.first);
    CAPTURE(ij.second);
    CHECK(t.at(ij.first, ij.second) == IntegralEntry{fr.first, fr.second});
  }
  for (const auto& [ij, e] : t.entries)
    if (e.free_rank != 0 || e.two_torsion_exp != 0) CHECK(want.count(ij) == 1);
  CHECK(t.at(3, 7) == IntegralEntry{3, 0});
  CHECK(t.at(4, 7).two_torsion_exp == 1);
  CHECK(t.at(1, 1) == IntegralEntry{3, 4});
  CHECK(t.at(0, -1) == IntegralEntry{5, 4});
}

TEST_CASE("integral homology of the figure eight") {
  IntegralKhTable t = integral_kh(2);
  CHECK(t.at(-1, -3).two_torsion_exp == 1);
  CHECK(t.at(2, 3).two_torsion_exp == 1);
  CHECK(t.total_torsion() == 2);
}

TEST_CASE("torsion total matches the rule") {
  for (long n : {2, 4, 5, 7, 8, 10, 11, 25}) {
    KhTable kh = kh_table(n);
    BigInt expected = 0;
    for (const auto& [ij, d] : kh.dims)
      if (ij.second == 2 * ij.first - 1 - kh.sigma) expected += d;
    expected -= 1;
    CHECK(integral_kh(kh).total_torsion() == expected);
  }
}

TEST_CASE("support, euler characteristic and knight moves") {
  CHECK(check_support(kh_table(10), 3, 10));
  CHECK(check_support(kh_table(23), 3, 23));
  CHECK(euler_check(kh_table(2), jones(2)));
  CHECK(euler_check(kh_table(11), jones(11)));
  KhTable spurious = kh_table(10);
  spurious.dims[{0, 5}] = 1;
  CHECK_FALSE(check_support(spurious, 3, 10));
  CHECK_FALSE(euler_check(spurious, jones(10)));
  for (long n = 1; n <= 100; ++n) {
    if (n % 3 == 0) continue;
    KhTable kh = kh_table(n);
    REQUIRE(check_support(kh, 3, n));
    REQUIRE(euler_check(kh, jones(n)));
    REQUIRE(knight_move_check(kh));
  }
}

TEST_CASE("even strand counts put the support on shifted lines") {
  KhTable kh;
  kh.sigma = -4;
  kh.dims[{0, 3}] = 1;
  kh.dims[{0, 5}] = 1;
  CHECK(check_support(kh, 4, 5));
  CHECK_FALSE(check_support(kh, 3, 5));
}

TEST_CASE("links are rejected") { CHECK_THROWS_AS(kh_table(6), RangeError); }

TEST_CASE("exports") {
  std::string csv = to_csv(kh_table(2));
  CHECK(csv.rfind("i,j,dim\n", 0) == 0);
  CHECK(csv.find("-2,-5,1\n") != std::string::npos);
  std::string icsv = to_csv(integral_kh(2));
  CHECK(icsv.rfind("i,j,free_rank,two_torsion_exp\n", 0) == 0);
  std::string svg = to_svg(kh_table(4));
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);
}

}  // TEST_SUITE
