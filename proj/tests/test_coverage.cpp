#include <doctest.h>

#include <random>
#include <sstream>

#include "monoclin/coverage.hpp"
#include "monoclin/families.hpp"
#include "monoclin/fixtures.hpp"

using namespace monoclin;

namespace {
SParams sp(const char* csv) { return SParams::parse(csv); }
}

TEST_CASE("invert_general fixtures") {
  const auto got = invert_general(sp("1/2,16/7,16/5,16/35"));
  REQUIRE(got.has_value());
  CHECK(got->s == Rational(1, 2));
  CHECK(got->r == Rational(1, 3));

  const SParams generated = general_rat(Rational(2, 5), Rational(3, 7));
  const auto round = invert_general(generated);
  REQUIRE(round.has_value());
  CHECK(round->s == Rational(2, 5));
  CHECK(round->r == Rational(3, 7));

  CHECK_FALSE(invert_general(sp("3/10,4/15,4/5,3/20")).has_value());
  CHECK_THROWS_AS(invert_general(sp("1/2,1/3,1/4,1/5")), std::domain_error);
}

TEST_CASE("invert_general returns the paper-style root and the partner works too") {
  const auto got = invert_general(sp("1/2,16/7,16/5,16/35"));
  REQUIRE(got.has_value());
  // Roots of the recovery quadratic multiply to -1; the partner -1/r also
  // regenerates an equivalent solution.
  const Rational partner = -(got->r.reciprocal());
  CHECK(equivalent(general_rat(got->s, partner), sp("1/2,16/7,16/5,16/35")));
  CHECK(got->r.sign() > 0);
}

TEST_CASE("invert_pattern1 fixtures") {
  auto q = invert_pattern1(sp("1/2,1/7,1/10,7/10"));
  REQUIRE(q.has_value());
  CHECK(*q == Rational(2));

  q = invert_pattern1(sp("1/2,7/17,7/26,17/26"));
  REQUIRE(q.has_value());
  CHECK(*q == Rational(3, 2));

  CHECK_FALSE(invert_pattern1(sp("3/10,4/15,4/5,3/20")).has_value());
  // Round trip through the generator.
  const SParams g = pattern1_rat(Rational(5, 3));
  auto back = invert_pattern1(g);
  REQUIRE(back.has_value());
  CHECK(pattern1_rat(*back) == g);
}

TEST_CASE("every matched table row inverts to its printed parameter") {
  for (const auto& row : fixtures::table1()) {
    const auto got = invert_general(row.s);
    REQUIRE(got.has_value());
    CHECK(got->s == Rational(1, 2));
    CHECK(got->r == row.q);
  }
}

TEST_CASE("no unmatched table row inverts") {
  for (const SParams& s : fixtures::table2()) {
    CHECK_FALSE(invert_general(s).has_value());
    CHECK_FALSE(invert_pattern1(s).has_value());
  }
}

TEST_CASE("classify splits the builtin tables 20/16") {
  std::vector<SolutionRecord> records;
  for (const auto& row : fixtures::table1())
    records.push_back(make_record(row.s, Provenance::Import));
  const CoverageReport t1 = classify(records);
  CHECK(t1.total == 20);
  CHECK(t1.covered == 20);
  CHECK(t1.anomalous == 0);

  std::vector<SolutionRecord> records2;
  for (const auto& s : fixtures::table2())
    records2.push_back(make_record(s, Provenance::Import));
  const CoverageReport t2 = classify(records2);
  CHECK(t2.total == 16);
  CHECK(t2.covered == 0);
  CHECK(t2.anomalous == 16);

  records.insert(records.end(), records2.begin(), records2.end());
  const CoverageReport both = classify(records);
  CHECK(both.total == 36);
  CHECK(both.covered == 20);
  CHECK(both.anomalous == 16);
  REQUIRE(both.entries.size() == 36);
  CHECK(both.entries[0].method == CoverMethod::General);
  REQUIRE(both.entries[0].params.size() == 2);
  CHECK(both.entries[0].params[1] == Rational(1, 3));
  CHECK(both.entries[20].method == CoverMethod::None);
}

TEST_CASE("round-trip inversion across random parameters") {
  std::mt19937_64 rng(20240809);
  std::uniform_int_distribution<long> d(1, 50);
  int done = 0;
  while (done < 250) {
    const Rational s(d(rng), d(rng));
    const Rational r(d(rng), d(rng));
    if (r == Rational(1)) continue;
    const SParams g = general_rat(s, r);
    if (!is_solution(g)) continue;
    const auto got = invert_general(g);
    REQUIRE(got.has_value());
    CHECK(equivalent(general_rat(got->s, got->r), g));
    CHECK(got->s == s);
    CHECK(got->r == r);
    ++done;
  }
}

TEST_CASE("report json shape") {
  std::vector<SolutionRecord> records;
  records.push_back(make_record(fixtures::table1()[0].s, Provenance::Import));
  records.push_back(make_record(fixtures::table2()[0], Provenance::Import));
  const std::string json = report_json(classify(records));
  CHECK(json.find("\"total\": 2") != std::string::npos);
  CHECK(json.find("\"covered\": 1") != std::string::npos);
  CHECK(json.find("\"anomalous\": 1") != std::string::npos);
  CHECK(json.find("\"method\": \"general\"") != std::string::npos);
  CHECK(json.find("\"method\": null") != std::string::npos);
  CHECK(json.find("\"1/3\"") != std::string::npos);
}

TEST_CASE("plot points") {
  std::vector<PlotRow> rows;
  rows.push_back({sp("1/2,16/7,16/5,16/35"), "ACUTE"});
  rows.push_back({sp("1/2,7/16,5/16,16/35"), "OBTUSE"});
  rows.push_back({sp("1/2,1/3,2/7,2/7"), "IMPORT"});  // cuboid direction, x = 0
  const std::string csv = emit_plot_points(rows);
  CHECK(csv ==
        "x_exact,x_abs,y,family\n"
        "96/35,2.74285714286e+00,16,ACUTE\n"
        "-81/560,1.44642857143e-01,7,OBTUSE\n"
        "0,0,1,IMPORT\n");
}

TEST_CASE("plot rows from either jsonl schema") {
  std::ostringstream lines;
  lines << to_jsonl(make_family_point(Family::Acute, {Rational(2), Rational(2)},
                                      sp("1/2,16/7,16/5,16/35")))
        << '\n';
  lines << to_jsonl(make_record(sp("1/2,7/16,5/16,16/35"), Provenance::Search)) << '\n';
  std::istringstream in(lines.str());
  const auto rows = plot_rows_from_stream(in);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].s == sp("1/2,16/7,16/5,16/35"));
  CHECK(rows[0].tag == "ACUTE");
  CHECK(rows[1].tag == "SEARCH");
  // The record was created from a non-canonical spelling, preserved in "raw".
  CHECK(rows[1].s == sp("1/2,7/16,5/16,16/35"));
}
