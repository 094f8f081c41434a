#include <cmath>
#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "weavekit/errors.hpp"
#include "weavekit/invariants.hpp"
#include "weavekit/twistvol.hpp"

using namespace weavekit;

TEST_SUITE("twistvol") {

TEST_CASE("twist numbers from jones") {
  CHECK(twist_numbers(jones(10), 1).values.at(1) == 20);
  CHECK(twist_numbers(jones(10), 2).values.at(2) == 90);
  CHECK(twist_numbers(jones(11), 3).values.at(3) == 352);
  CHECK_THROWS_AS(twist_numbers(jones(2), 3), RangeError);
}

TEST_CASE("closed forms") {
  CHECK(closed_form_T(2, 10) == 90);
  CHECK(closed_form_T(3, 5) == 30);
  CHECK(closed_form_T(4, 20) == twist_numbers(jones(20), 4).values.at(4));
  CHECK(closed_form_T(4, 20) == 10410);
  for (long k = 1; k <= 7; ++k)
    for (long n = -30; n <= 60; ++n) CHECK_NOTHROW(closed_form_T(k, n));
  CHECK_THROWS_AS(closed_form_T(8, 20), RangeError);
  CHECK(is_conjectural(4));
  CHECK_FALSE(is_conjectural(3));
  CHECK(leading_coefficient(2) == Rational(1));
  CHECK(leading_coefficient(3) == Rational(1, 3));
}

TEST_CASE("proved twist formulas") {
  for (long n = 3; n <= 200; ++n) {
    if (n % 3 == 0) continue;
    TwistReport r = twist_numbers(jones(n), n >= 5 ? 3 : 1);
    REQUIRE(r.values.at(1) == 2 * n);
    if (n >= 5) {
      REQUIRE(r.values.at(2) == BigInt(n) * (n - 1));
      REQUIRE(r.values.at(3) == BigInt(n) * (n - 1) * (n - 2) / 3 + 2 * n);
    }
  }
}

TEST_CASE("conjecture report") {
  ConjectureReport a = verify_conjectures(5, 50);
  for (long n = 5; n <= 50; ++n) {
    if (n % 3 == 0) continue;
    CHECK(a.match.at({2, n}));
    CHECK(a.match.at({3, n}));
  }
  ConjectureReport b = verify_conjectures(20, 60);
  CHECK(b.mismatches.empty());
  ConjectureReport c = verify_conjectures(3, 40);
  for (long k = 4; k <= 7; ++k) CHECK(c.threshold.at(k) == k + 2);
  for (const auto& [k, n] : c.mismatches) CHECK(n == k + 1);
}

TEST_CASE("twist report labels") {
  TwistReport r = twist_report(20, 7);
  CHECK(r.values.size() == 7);
  for (long k = 1; k <= 7; ++k) CHECK(r.closed_form_match.at(k));
}

TEST_CASE("volume bounds") {
  VolumeBounds b10 = volume_bounds_relative(10);
  CHECK(b10.lower == doctest::Approx(0.862530712922168).epsilon(1e-12));
  CHECK(b10.upper == doctest::Approx(2.02988321281931).epsilon(1e-12));
  CHECK(volume_bounds_relative(7).lower == doctest::Approx(0.156920156074256).epsilon(1e-12));
  CHECK(volume_bounds_relative(100).lower == doctest::Approx(1.82109364054335).epsilon(1e-12));
  CHECK(volume_bounds_relative(1000000).lower == doctest::Approx(GeomConstants::v_oct / 2).epsilon(1e-9));
  CHECK_THROWS_AS(volume_bounds_relative(6), RangeError);
}

TEST_CASE("normalized curves") {
  CHECK(normalization_constant(2) == doctest::Approx(4.05976642563861).epsilon(1e-12));
  CHECK(normalization_constant(3) == doctest::Approx(5.85519638292573).epsilon(1e-12));
  CHECK(normalized_twist_curve(2, 100000) == doctest::Approx(2 * GeomConstants::v_tet).epsilon(1e-4));
  for (long k = 2; k <= 7; ++k)
    for (long n = k + 2; n <= 200; ++n) {
      if (n % 3 == 0) continue;
      REQUIRE(normalized_twist_curve(k, n) < 2 * GeomConstants::v_tet);
    }
  CHECK_THROWS_AS(normalized_twist_curve(1, 10), RangeError);
  CHECK_THROWS_AS(normalized_twist_curve(4, 5), RangeError);
}

TEST_CASE("volume ingestion") {
  std::vector<VolumeRecord> v = parse_volumes("n,volume\n4,7.3277\n5,10.1\n");
  REQUIRE(v.size() == 2);
  CHECK(v[0].n == 4);
  CHECK(v[1].volume == doctest::Approx(10.1));
  CHECK_THROWS_AS(parse_volumes("n,vol\n4,1\n"), ParseError);
  CHECK_THROWS_AS(parse_volumes("n,volume\n4\n"), ParseError);
  CHECK_THROWS_AS(parse_volumes("n,volume\nx,1\n"), ParseError);
  CHECK_THROWS_AS(parse_volumes("n,volume\n4,-1\n"), ParseError);
  CHECK_THROWS_AS(parse_volumes("n,volume\n6,1\n"), ParseError);
  CHECK_THROWS_AS(ingest_volumes("/nonexistent/volumes.csv"), IoError);
}

TEST_CASE("correlation") {
  std::vector<VolumeRecord> lin, flat;
  for (long n : {4, 5, 7, 8, 10, 11}) {
    lin.push_back({n, 0.25 * static_cast<double>(n * (n - 1)) + 3});
    flat.push_back({n, 2.0});
  }
  CorrelationReport r = correlation_report(2, lin);
  CHECK(r.pearson_r == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_FALSE(r.degenerate);
  CHECK(r.scatter_csv.rfind("n,T_2,volume\n", 0) == 0);
  CHECK(r.scatter_csv.find("\n4,12,") != std::string::npos);
  CorrelationReport d = correlation_report(2, flat);
  CHECK(d.degenerate);
  CHECK(d.pearson_r == 0.0);
  CHECK_THROWS_AS(correlation_report(2, {{4, 1.0}, {5, 2.0}}), MissingData);
}

TEST_CASE("bounds export") {
  std::string csv = bounds_csv(7, 20);
  CHECK(csv.rfind("n,lower,upper,curve_k2,curve_k3,curve_k4,vol_rel\n", 0) == 0);
  CHECK(csv.find("\n9,") == std::string::npos);
  CHECK(csv.find("\n10,") != std::string::npos);
  std::string with = bounds_csv(7, 11, {{10, 25.0}});
  CHECK(with.find("1.25") != std::string::npos);
}

}  // TEST_SUITE
