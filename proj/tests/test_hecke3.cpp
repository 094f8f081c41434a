#include "doctest.h"
#include "weavekit/errors.hpp"
#include "weavekit/hecke3.hpp"
#include "weavekit/reference_data.hpp"

using namespace weavekit;

namespace {

std::vector<LaurentPoly> as_list(const HeckeCoeffs& h) { return {h.c0, h.c1, h.c2, h.c12, h.c21}; }

LaurentPoly P(long lo, std::initializer_list<long> cs) { return LaurentPoly(lo, cs); }

}  // namespace

TEST_SUITE("hecke3") {

TEST_CASE("initial values") {
  HeckeCoeffs h = initial_coeffs();
  CHECK(h.n == 1);
  CHECK(h.c1 == P(0, {1, -1}));
  CHECK(h.c12 == P(0, {1}));
  CHECK(h.c0.is_zero());
  CHECK(h.c2.is_zero());
  CHECK(h.c21.is_zero());
  CHECK(h.c1.coefficient(0) == 1);
  CHECK(h.c12.span() == 0);
}

TEST_CASE("first steps") {
  HeckeCoeffs h2 = step(initial_coeffs());
  CHECK(h2.c0 == P(1, {1, -2, 1}));
  CHECK(h2.c1 == P(0, {-1, 3, -3, 1}));
  CHECK(h2.c2 == P(1, {1, -1}));
  CHECK(h2.c12 == P(0, {-1, 2, -1}));
  CHECK(h2.c21 == P(1, {1}));
  HeckeCoeffs h3 = step(h2);
  CHECK(h3.c0 == P(1, {-1, 4, -5, 4, -1}));
  CHECK(h3.c21 == P(1, {-1, 2, -1}));
  CHECK(h3.c2 == P(1, {-1, 3, -3, 1}));
  HeckeCoeffs h4 = step(h3);
  CHECK(h4.c1 == P(0, {-1, 5, -11, 16, -16, 11, -5, 1}));
}

TEST_CASE("tabulated values") {
  for (const auto& [n, polys] : reference::hecke_table()) {
    CAPTURE(n);
    CHECK(as_list(coeffs(n)) == polys);
  }
}

TEST_CASE("recursion agrees with the matrix oracle") {
  CHECK(oracle_matrix_power(1) == initial_coeffs());
  for (long n = 1; n <= 12; ++n) {
    CAPTURE(n);
    CHECK(coeffs(n) == oracle_matrix_power(n));
  }
}

TEST_CASE("step rejects a nonzero T1T2T1 coordinate") {
  HeckeCoeffs bad = coeffs(3);
  bad.c2 = bad.c2 + P(0, {1});
  CHECK_THROWS_AS(step(bad), RecursionInvariantViolated);
}

TEST_CASE("range errors") {
  CHECK_THROWS_AS(coeffs(0), RangeError);
  CHECK_THROWS_AS(oracle_matrix_power(0), RangeError);
  CHECK_THROWS_AS(check_structure(coeffs(1)), RangeError);
  CHECK_THROWS_AS(second_order_coeffs(2), RangeError);
}

TEST_CASE("structure checks") {
  StructureReport r2 = check_structure(coeffs(2));
  CHECK(r2.all_passed());
  CHECK(coeffs(2).c21.coefficient(1) == 1);
  CHECK(coeffs(3).c1.coefficient(1) == -4);
  CHECK(check_structure(coeffs(50)).all_passed());
  HeckeCoeffs h = initial_coeffs();
  long checked = 0;
  for (long n = 2; n <= 200; ++n) {
    h = step(h);
    StructureReport r = check_structure(h);
    for (const auto& it : r.items)
      if (!it.passed) FAIL_CHECK("n=" << n << " " << it.name << ": " << it.detail);
    ++checked;
  }
  CHECK(checked == 199);
}

TEST_CASE("structure checks catch a corrupted coefficient") {
  HeckeCoeffs h = coeffs(6);
  h.c12 = h.c12 + P(3, {1});
  CHECK_FALSE(check_structure(h).all_passed());
}

TEST_CASE("coefficient symmetry by index") {
  for (long n = 2; n <= 60; ++n) {
    HeckeCoeffs h = coeffs(n);
    for (long i = 0; i <= 2 * n; ++i) {
      REQUIRE(h.c0.coefficient(i) == h.c0.coefficient(2 * n - i));
      REQUIRE(h.c1.coefficient(i) == -h.c1.coefficient(2 * n - 1 - i));
      REQUIRE(h.c2.coefficient(i) == -h.c2.coefficient(2 * n - 1 - i));
      REQUIRE(h.c12.coefficient(i) == h.c12.coefficient(2 * n - 2 - i));
      REQUIRE(h.c21.coefficient(i) == h.c21.coefficient(2 * n - 2 - i));
    }
  }
}

TEST_CASE("second-order coefficients") {
  SecondOrderCoeffs s4 = second_order_coeffs(4);
  CHECK(*s4.c_n_1_2 == -11);
  CHECK(*s4.c_n_1_3 == 16);
  CHECK_FALSE(s4.c_n_0_3.has_value());
  SecondOrderCoeffs s3 = second_order_coeffs(3);
  CHECK(*s3.c_n_21_2 == 2);
  CHECK_FALSE(s3.c_n_1_2.has_value());
  for (long n = 3; n <= 120; ++n) {
    CAPTURE(n);
    CHECK(check_second_order(coeffs(n)));
  }
}

TEST_CASE("json keys") {
  nlohmann::json j = to_json(coeffs(3));
  for (const char* key : {"C0", "C1", "C2", "C12", "C21"}) CHECK(j.contains(key));
  CHECK(laurent_from_json(j["C0"]) == coeffs(3).c0);
}

}  // TEST_SUITE
