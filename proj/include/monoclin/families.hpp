#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "monoclin/rational.hpp"
#include "monoclin/sparams.hpp"

namespace monoclin {

enum class Family {
  P1Set1,
  P1Set2,
  P1Set3,
  P1Set4,
  P1Int,
  P1Rat,
  P2Int,
  P2Rat,
  GenInt,
  GenRat,
  Obtuse,
  Acute,
};

std::string_view family_name(Family f);          // "P1_SET1", ...
Family family_from_name(std::string_view name);  // throws std::invalid_argument

/// A generated solution together with its provenance: which closed form
/// produced it and from which parameters. `s` is exactly what the formula
/// yields (signs and magnitudes included); `canonical` is its normal form.
/// Degenerate outputs (an entry in {0, 1, -1}) are kept and flagged rather
/// than dropped, so sweep statistics stay honest.
struct FamilyPoint {
  Family family = Family::GenRat;
  std::vector<Rational> params;
  SParams s;
  SParams canonical;
  bool feasible = false;
  bool degenerate = false;
};

/// Builds the point, verifying the generated quadruple actually lies on the
/// governing quartic (every closed form here does; a violation is a bug).
FamilyPoint make_family_point(Family family, std::vector<Rational> params,
                              const SParams& s);

/// One JSON object, keys family/params/s/canonical/feasible (+degenerate
/// when set).
std::string to_jsonl(const FamilyPoint& p);

struct Sum2SquaresTriple {
  Integer alpha, beta, gamma;  // alpha^2 + beta^2 = 2 gamma^2
};

/// alpha = 2mn+m^2-n^2, beta = 2mn+n^2-m^2, gamma = m^2+n^2.
Sum2SquaresTriple sum2squares_param(const Integer& m, const Integer& n);

/// The four collected first-pattern solution sets for integer (m,n); all
/// four are mutually equivalent under normalize. Throws
/// std::domain_error("degenerate parameter pair") when mn = 0 or m^2 = n^2
/// (those force an entry of +-1).
std::array<SParams, 4> pattern1_four_sets(const Integer& m, const Integer& n);

/// First pattern, one rational parameter. Defined for every rational q;
/// q in {0, 1, -1} yields a degenerate quadruple (s2 = +-1), which is
/// returned as-is for the caller to flag.
SParams pattern1_rat(const Rational& q);

/// Second pattern. Integer form requires mn != 0 and m != +-n; rational
/// form requires q not in {0, 1, -1} (else the shared denominator is zero).
SParams pattern2_int(const Integer& m, const Integer& n);
SParams pattern2_rat(const Rational& q);

/// General parameterization covering both patterns. Integer form
/// general_int(r, s, m, n) requires r s != 0, mn != 0, m != +-n; rational
/// form general_rat(s, r) requires s != 0 and r not in {0, 1, -1}.
/// general_rat(1/2, r) specializes to pattern2_rat(r).
SParams general_int(const Integer& r, const Integer& s, const Integer& m,
                    const Integer& n);
SParams general_rat(const Rational& s, const Rational& r);

/// Cuboid-closeness measure of the general form: equals s3 - s4 of
/// general_rat(s, r) exactly; zero only in the degenerate cuboid direction.
Rational t_general(const Rational& s, const Rational& r);

}  // namespace monoclin
