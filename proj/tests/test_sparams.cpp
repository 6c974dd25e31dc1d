#include <doctest.h>

#include <algorithm>
#include <random>

#include "monoclin/fixtures.hpp"
#include "monoclin/geometry.hpp"
#include "monoclin/sparams.hpp"

using namespace monoclin;

namespace {

SParams sp(const char* csv) { return SParams::parse(csv); }

Rational rnd_nonzero(std::mt19937_64& rng, long lim = 24) {
  std::uniform_int_distribution<long> num(-lim, lim);
  std::uniform_int_distribution<long> den(1, lim);
  while (true) {
    const long n = num(rng);
    if (n != 0) return Rational(n, den(rng));
  }
}

// Independent route to the residual through the triangle map: the governing
// polynomial equals 4 (s1 s2 s3 s4)^2 (u3^2 + u4^2 - 2 u1^2 - 2 u2^2).
Rational residual_via_triangles(const SParams& s) {
  Rational pre(4);
  std::array<Rational, 4> u2;
  for (int i = 0; i < 4; ++i) {
    pre *= s[i].squared();
    const Rational t = (Rational(1) - s[i].squared()) / (Rational(2) * s[i]);
    u2[i] = t.squared();
  }
  return pre * (u2[2] + u2[3] - Rational(2) * u2[0] - Rational(2) * u2[1]);
}

}  // namespace

TEST_CASE("SParams parsing") {
  CHECK(sp("1/2, 16/7,16/5 ,16/35").str() == "1/2,16/7,16/5,16/35");
  CHECK_THROWS_AS(SParams::parse("1/2,1/3"), std::invalid_argument);
  CHECK_THROWS_AS(SParams::parse("1,2,3,4,5"), std::invalid_argument);
  CHECK_THROWS_AS(SParams::parse("1,2,3,x"), std::invalid_argument);
}

TEST_CASE("governing residual fixtures") {
  CHECK(governing_residual(sp("1,1,1,1")) == Rational(0));
  CHECK(governing_residual(sp("1/2,16/7,16/5,16/35")) == Rational(0));
  CHECK(governing_residual(sp("1/2,1/2,1/2,1/2")) == Rational(-9, 512));
  CHECK_THROWS_AS(governing_residual(sp("0,1,1,1")), std::domain_error);
}

TEST_CASE("residual agrees with the triangle route") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 400; ++i) {
    const SParams s(rnd_nonzero(rng), rnd_nonzero(rng), rnd_nonzero(rng), rnd_nonzero(rng));
    CHECK(governing_residual(s) == residual_via_triangles(s));
  }
}

TEST_CASE("is_solution") {
  CHECK(is_solution(sp("1/2,1/7,1/10,7/10")));
  CHECK_FALSE(is_solution(sp("1,1,1,1")));          // degenerate zero residual
  CHECK_FALSE(is_solution(sp("1/2,1/3,1/4,1/5")));  // nonzero residual
  CHECK_FALSE(is_solution(sp("0,1/3,1/4,1/5")));    // zero entry, no throw
  CHECK_FALSE(is_solution(sp("-1,1/7,1/10,7/10")));
}

TEST_CASE("normalize fixtures") {
  CHECK(normalize(sp("1/2,7,10,10/7")) == sp("1/7,1/2,1/10,7/10"));
  CHECK(normalize(sp("1/7,1/2,1/10,7/10")) == sp("1/7,1/2,1/10,7/10"));
  CHECK(normalize(sp("1/2,16/7,16/5,16/35")) == sp("7/16,1/2,5/16,16/35"));
  CHECK(normalize(sp("-1/2,7,-10,10/7")) == sp("1/7,1/2,1/10,7/10"));
  CHECK_THROWS_AS(normalize(sp("0,1,1,1")), std::domain_error);
}

TEST_CASE("normalize is idempotent and lands in (0,1]") {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 300; ++i) {
    const SParams s(rnd_nonzero(rng), rnd_nonzero(rng), rnd_nonzero(rng), rnd_nonzero(rng));
    const SParams n = normalize(s);
    CHECK(normalize(n) == n);
    for (int k = 0; k < 4; ++k) {
      CHECK(n[k] > Rational(0));
      CHECK(n[k] <= Rational(1));
    }
    CHECK(n[0] <= n[1]);
    CHECK(n[2] <= n[3]);
  }
}

TEST_CASE("equivalent") {
  CHECK(equivalent(sp("1/2,1/7,1/10,7/10"), sp("1/2,7,10,10/7")));
  const SParams x = sp("1/2,16/7,16/5,16/35");
  CHECK(equivalent(x, x));
  CHECK(equivalent(sp("1/2,16/7,16/5,16/35"), sp("1/2,7/16,5/16,35/16")));
  CHECK_FALSE(equivalent(sp("1/2,1/7,1/10,7/10"), sp("1/2,16/7,16/5,16/35")));
}

TEST_CASE("sharipov feasibility") {
  CHECK(sharipov_feasible(sp("1/2,7/17,7/26,17/26")));
  CHECK_FALSE(sharipov_feasible(sp("1/2,1/7,1/10,7/10")));
  CHECK_FALSE(sharipov_feasible(sp("1/2,16/7,16/5,16/35")));  // outside (0,1)^4

  // The two cubic values behind the verdicts, evaluated inline.
  auto cubic = [](const Rational& x, const Rational& y, const Rational& z) {
    return x * y * y * z + x * x * y * z - x * y * z * z + x * y - y * z - x * z;
  };
  CHECK(cubic(Rational(1, 2), Rational(1, 7), Rational(1, 10)) == Rational(108, 9800));
  CHECK(cubic(Rational(1, 2), Rational(7, 17), Rational(7, 26)) == Rational(-777, 195364));
  CHECK(cubic(Rational(1, 2), Rational(7, 17), Rational(17, 26)) == Rational(-2043, 5746));
}

TEST_CASE("solve_for_s4 fixtures") {
  CHECK(solve_for_s4(Rational(1, 2), Rational(16, 7), Rational(16, 5)) ==
        std::vector<Rational>{Rational(16, 35), Rational(35, 16)});
  CHECK(solve_for_s4(Rational(1), Rational(1), Rational(1)) ==
        std::vector<Rational>{Rational(1)});
  CHECK(solve_for_s4(Rational(1, 2), Rational(1, 3), Rational(1, 5)).empty());
  CHECK_THROWS_AS(solve_for_s4(Rational(0), Rational(1), Rational(1)), std::domain_error);
}

TEST_CASE("solve_for_s4 returns reciprocal pairs that solve the equation") {
  std::mt19937_64 rng(31);
  int hits = 0;
  for (int i = 0; i < 4000 && hits < 25; ++i) {
    const Rational s1 = rnd_nonzero(rng, 10).abs();
    const Rational s2 = rnd_nonzero(rng, 10).abs();
    const Rational s3 = rnd_nonzero(rng, 10).abs();
    const auto roots = solve_for_s4(s1, s2, s3);
    for (const Rational& r : roots) {
      CHECK(r > Rational(0));
      CHECK(governing_residual(SParams(s1, s2, s3, r)) == Rational(0));
      const Rational inv = r.reciprocal();
      CHECK(std::find(roots.begin(), roots.end(), inv) != roots.end());
      ++hits;
    }
  }
  CHECK(hits >= 25);
}

TEST_CASE("solve_for_s4 is consistent with known solutions") {
  for (const auto& row : fixtures::table1()) {
    const auto roots = solve_for_s4(row.s[0], row.s[1], row.s[2]);
    bool found = false;
    for (const Rational& r : roots)
      found = found || r == row.s[3].abs() || r == row.s[3].abs().reciprocal();
    CHECK(found);
  }
}

TEST_CASE("solution property is invariant across the symmetry orbit") {
  // Solutions stay solutions and non-solutions stay non-solutions under
  // per-coordinate reciprocals and within-pair swaps.
  const SParams solution = sp("1/2,16/7,16/5,16/35");
  for (const SParams& w : symmetry_orbit(solution)) {
    CHECK(governing_residual(w) == Rational(0));
  }
  const SParams non_solution = sp("1/2,1/3,1/4,1/5");
  for (const SParams& w : symmetry_orbit(non_solution)) {
    CHECK(governing_residual(w) != Rational(0));
  }
  CHECK(symmetry_orbit(solution).size() == 64);
}

TEST_CASE("triangle identities of solutions") {
  // 2u1^2 + 2v2^2 = v3^2 + v4^2 and 2v1^2 + 2u2^2 = v3^2 + v4^2.
  for (const SParams& s : {sp("1/2,1/7,1/10,7/10"), sp("1/2,16/7,16/5,16/35"),
                           sp("1/2,7/17,7/26,17/26")}) {
    std::array<Rational, 4> u2, v2;
    for (int i = 0; i < 4; ++i) {
      const RationalTriple t = s_to_triple(s[i]);
      u2[i] = t.u.squared();
      v2[i] = t.v.squared();
    }
    CHECK(Rational(2) * u2[0] + Rational(2) * v2[1] == v2[2] + v2[3]);
    CHECK(Rational(2) * v2[0] + Rational(2) * u2[1] == v2[2] + v2[3]);
  }
}
