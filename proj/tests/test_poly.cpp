#include <random>

#include "doctest.h"
#include "weavekit/bilaurent_poly.hpp"
#include "weavekit/errors.hpp"
#include "weavekit/laurent_poly.hpp"

using namespace weavekit;

namespace {

// Random Laurent polynomials with small exponents and mixed-size coefficients.
struct PolyGen {
  std::mt19937_64 rng;
  explicit PolyGen(std::uint64_t seed) : rng(seed) {}

  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

  BigInt coeff() {
    BigInt c = uniform(-50, 50);
    if (uniform(0, 9) == 0) {
      BigInt big = 1;
      big <<= uniform(64, 200);
      c = c * big + uniform(-1000, 1000);
    }
    return c;
  }

  LaurentPoly poly(long max_len = 8) {
    long len = uniform(0, max_len);
    std::vector<BigInt> cs;
    for (long i = 0; i < len; ++i) cs.push_back(uniform(0, 3) == 0 ? BigInt(0) : coeff());
    return LaurentPoly(uniform(-6, 6), std::move(cs));
  }

  LaurentPoly nonzero(long max_len = 5) {
    for (;;) {
      LaurentPoly p = poly(max_len);
      if (!p.is_zero()) return p;
    }
  }
};

LaurentPoly P(long lo, std::initializer_list<long> cs) { return LaurentPoly(lo, cs); }

}  // namespace

TEST_SUITE("poly") {

TEST_CASE("add examples") {
  CHECK(P(1, {1, -2, 1}) + P(2, {1}) == P(1, {1, -1, 1}));
  LaurentPoly p = P(-3, {4, 0, 7});
  CHECK(p + LaurentPoly() == p);
  CHECK(P(0, {-1, 3, -3, 1}) + P(0, {-1, 2, -1}) == P(0, {-2, 5, -4, 1}));
}

TEST_CASE("mul examples") {
  CHECK(P(0, {-1, 1}) * P(0, {-1, 1}) == P(0, {1, -2, 1}));
  CHECK(P(-1, {1}) * P(1, {1}) == P(0, {1}));
  CHECK(P(1, {1}) * P(0, {-1, 3, -3, 1}) == P(1, {-1, 3, -3, 1}));
}

TEST_CASE("exact_div examples") {
  CHECK(exact_div(P(-4, {1, 0, -1, 0, 0, 0, -1, 0, 1}), P(0, {1, 0, -1})) ==
        P(-4, {1, 0, 0, 0, 0, 0, -1}));
  LaurentPoly p = P(-2, {3, 1, 4, 1, 5});
  CHECK(exact_div(p, P(0, {1})) == p);
  CHECK(exact_div(P(0, {1, 0, 0, 0, -1}), P(0, {1, 0, -1})) == P(0, {1, 0, 1}));
  CHECK(exact_div(LaurentPoly(), P(0, {1, 1})).is_zero());
}

TEST_CASE("exact_div errors") {
  CHECK_THROWS_AS(exact_div(P(0, {1, 1}), P(0, {1, -1})), NonDivisible);
  CHECK_THROWS_AS(exact_div(P(0, {1}), P(0, {2})), NonDivisible);
  CHECK_THROWS_AS(exact_div(P(0, {1}), LaurentPoly()), NonDivisible);
}

TEST_CASE("substitute_power, deflate, alternate_signs") {
  LaurentPoly v = P(-2, {1, -1, 1, -1, 1});
  CHECK(substitute_power(v, 2) == P(-4, {1, 0, -1, 0, 1, 0, -1, 0, 1}));
  CHECK(substitute_power(v, 1) == v);
  CHECK(substitute_power(P(1, {2, 3}), -1) == P(-2, {3, 2}));
  CHECK(deflate(substitute_power(v, 3), 3) == v);
  CHECK_THROWS_AS(deflate(P(1, {1}), 2), RangeError);
  CHECK(alternate_signs(P(0, {1, 1})) == P(0, {1, -1}));
  CHECK(alternate_signs(P(-2, {1, 0, 0, 1})) == P(-2, {1, 0, 0, -1}));
}

TEST_CASE("coefficient, span, eval") {
  LaurentPoly v4 = P(-4, {1, -4, 6, -7, 9, -7, 6, -4, 1});
  CHECK(span(v4) == 8);
  CHECK(coefficient(v4, -4) == 1);
  CHECK(coefficient(v4, 0) == 9);
  CHECK(coefficient(v4, 12) == 0);
  CHECK(eval_rational(P(0, {-1, 1}), Rational(1)) == 0);
  CHECK(eval_rational(P(-1, {1, 0, 1}), Rational(2)) == Rational(5, 2));
  CHECK(span(LaurentPoly()) == 0);
  CHECK(LaurentPoly::monomial(BigInt(5), 3).span() == 0);
}

TEST_CASE("palindromes") {
  CHECK(is_palindromic(P(0, {1, 2, 1}), 2));
  CHECK(is_palindromic(P(0, {1, 0, -1}), 2, -1));
  CHECK_FALSE(is_palindromic(P(0, {1, 2, 3}), 2));
}

TEST_CASE("to_string and parse") {
  LaurentPoly v4 = P(-4, {1, -4, 6, -7, 9, -7, 6, -4, 1});
  CHECK(to_string(v4) == "t^4 - 4t^3 + 6t^2 - 7t + 9 - 7t^-1 + 6t^-2 - 4t^-3 + t^-4");
  CHECK(to_string(LaurentPoly()) == "0");
  CHECK(to_string(P(0, {-1}), "q") == "-1");
  CHECK(parse_laurent("t^{4} - 4*t^3 + 9 - t^{-4}") == P(-4, {-1, 0, 0, 0, 9, 0, 0, -4, 1}));
  CHECK(parse_laurent("q - q^2", "q") == P(1, {1, -1}));
  CHECK_THROWS_AS(parse_laurent("t^^2"), ParseError);
  CHECK_THROWS_AS(parse_laurent("x + 1"), ParseError);
}

TEST_CASE("json round trip") {
  LaurentPoly p = P(-3, {5, 0, -2});
  p = p * (BigInt(1) << 150);
  CHECK(laurent_from_json(to_json(p)) == p);
  BiLaurentPoly h;
  h.add_term(2, 4, 1);
  h.add_term(-2, 0, -1);
  h.add_term(0, 2, BigInt(1) << 100);
  CHECK(bilaurent_from_json(to_json(h)) == h);
}

TEST_CASE("ring axioms on random inputs") {
  PolyGen g(20240915);
  const LaurentPoly zero, one = P(0, {1});
  for (int iter = 0; iter < 1500; ++iter) {
    LaurentPoly a = g.poly(), b = g.poly(), c = g.poly();
    REQUIRE(a + b == b + a);
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE(a + zero == a);
    REQUIRE((a + (-a)).is_zero());
    REQUIRE(a - b == a + (-b));
    REQUIRE(a * b == b * a);
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * one == a);
    REQUIRE((a * zero).is_zero());
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE(substitute_power(a * b, 2) == substitute_power(a, 2) * substitute_power(b, 2));
    REQUIRE(alternate_signs(alternate_signs(a)) == a);
  }
}

TEST_CASE("exact_div round trip on random inputs") {
  PolyGen g(77);
  for (int iter = 0; iter < 1500; ++iter) {
    LaurentPoly a = g.poly(), d = g.nonzero();
    REQUIRE(exact_div(a * d, d) == a);
    LaurentPoly bump = LaurentPoly::monomial(1, d.highest_exp() + g.uniform(1, 3));
    if (d.span() > 0) CHECK_THROWS_AS(exact_div(a * d + bump, d), NonDivisible);
  }
}

TEST_CASE("trimming is canonical on random inputs") {
  PolyGen g(4242);
  for (int iter = 0; iter < 1500; ++iter) {
    LaurentPoly a = g.poly();
    if (!a.is_zero()) {
      REQUIRE(a.coeffs().front() != 0);
      REQUIRE(a.coeffs().back() != 0);
    } else {
      REQUIRE(a.lowest_exp() == 0);
    }
    std::vector<BigInt> padded = a.coeffs();
    padded.insert(padded.begin(), BigInt(0));
    padded.push_back(BigInt(0));
    REQUIRE(LaurentPoly(a.lowest_exp() - 1, padded) == a);
    REQUIRE(LaurentPoly(a.lowest_exp(), a.coeffs()) == a);
    REQUIRE(parse_laurent(to_string(a)) == a);
  }
}

TEST_CASE("bilaurent arithmetic") {
  PolyGen g(9);
  for (int iter = 0; iter < 300; ++iter) {
    std::map<long, LaurentPoly> ra{{-1, g.poly(4)}, {1, g.poly(4)}}, rb{{0, g.poly(4)}, {2, g.poly(4)}};
    BiLaurentPoly a = BiLaurentPoly::from_rows(ra), b = BiLaurentPoly::from_rows(rb);
    REQUIRE(a * b == b * a);
    REQUIRE((a + b) - b == a);
    REQUIRE((a * b).row(1) == ra[-1] * rb[2] + ra[1] * rb[0]);
  }
  BiLaurentPoly x;
  x.add_term(1, 1, 2);
  x.add_term(1, 1, -2);
  CHECK(x.is_zero());
}

}  // TEST_SUITE
