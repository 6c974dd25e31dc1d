#include <doctest.h>

#include "monoclin/asymptotics.hpp"
#include "monoclin/fixtures.hpp"
#include "monoclin/geometry.hpp"

using namespace monoclin;

namespace {
SParams sp(const char* csv) { return SParams::parse(csv); }
}

TEST_CASE("obtuse sequence") {
  CHECK(obtuse(2) == sp("1/2,7/16,5/16,16/35"));
  CHECK(obtuse_t(2) == Rational(-81, 560));
  CHECK(obtuse_t(2) == obtuse(2)[2] - obtuse(2)[3]);
  CHECK_THROWS_AS(obtuse(1), std::domain_error);
  CHECK_THROWS_AS(obtuse(0), std::domain_error);
  CHECK_THROWS_AS(obtuse_t(1), std::domain_error);

  for (long n = 2; n <= 40; ++n) {
    const SParams s = obtuse(n);
    CHECK(governing_residual(s) == Rational(0));
    CHECK(obtuse_t(n) == s[2] - s[3]);
    CHECK(obtuse_t(n) < Rational(0));
  }
}

TEST_CASE("acute sequence") {
  CHECK(acute(2, 2) == sp("1/2,16/7,16/5,16/35"));
  CHECK_THROWS_AS(acute(1, 5), std::domain_error);
  CHECK_THROWS_AS(acute(5, 1), std::domain_error);

  for (long d = 2; d <= 12; ++d)
    for (long n = 2; n <= 12; ++n) {
      const SParams s = acute(d, n);
      CHECK(s[0] == Rational(1, d));
      CHECK(governing_residual(s) == Rational(0));
      CHECK(acute_t(d, n) == s[2] - s[3]);
      CHECK(acute_t(d, n) > Rational(0));
    }
}

TEST_CASE("acute coefficients reproduce the builtin prefactor table") {
  const auto& table = fixtures::acute18();
  REQUIRE(table.size() == 18);
  for (const auto& row : table) CHECK(acute_coefficient(row.d) == row.coefficient);
  CHECK(acute_coefficient(2) == Rational(8, 3));
  CHECK(acute_coefficient(10) == Rational(40, 99));
  CHECK(acute_coefficient(16) == Rational(64, 255));
  CHECK(acute_coefficient(3) == Rational(3, 2));
  CHECK(acute_coefficient(19) == Rational(19, 90));
  CHECK_THROWS_AS(acute_coefficient(1), std::domain_error);
}

TEST_CASE("acute prefactor is the n-free part of s2..s4") {
  // s2 * (n^2-2)(n^2+4n+2) / (n(n+1)(n+2)) must equal the printed prefactor.
  for (long d = 2; d <= 19; ++d) {
    const long n = 5;
    const SParams s = acute(d, n);
    const Rational core(Integer(n) * (n + 1) * (n + 2));
    const Rational denom((Integer(n) * n - 2) * (Integer(n) * n + 4 * n + 2));
    CHECK(s[1] * denom / core == acute_coefficient(d));
  }
}

TEST_CASE("the two sequences intersect at their smallest parameters") {
  CHECK(equivalent(obtuse(2), acute(2, 2)));
}

TEST_CASE("both sequences approach the cuboid") {
  // |cos| strictly decreasing, |s3 - s4| strictly decreasing toward zero.
  Rational prev_cos, prev_t;
  for (long n = 3; n <= 30; ++n) {
    const Rational c = cos_angle(reconstruct(normalize(obtuse(n)))).abs();
    const Rational t = obtuse_t(n).abs();
    if (n > 3) {
      CHECK(c < prev_cos);
      CHECK(t < prev_t);
    }
    prev_cos = c;
    prev_t = t;
  }
  for (long n = 3; n <= 30; ++n) {
    const Rational c = cos_angle(reconstruct(normalize(acute(2, n)))).abs();
    const Rational t = acute_t(2, n).abs();
    if (n > 3) {
      CHECK(c < prev_cos);
      CHECK(t < prev_t);
    }
    prev_cos = c;
    prev_t = t;
  }
}

TEST_CASE("closeness measures vanish only in the cuboid direction") {
  for (long n = 2; n <= 20; ++n) CHECK(obtuse_t(n) != Rational(0));
  for (long d = 2; d <= 10; ++d)
    for (long n = 2; n <= 20; ++n) CHECK(acute_t(d, n) != Rational(0));
}
