#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "monoclin/rational.hpp"

namespace monoclin {

/// The quadruple [s1,s2,s3,s4] generating four rational right triangles,
/// one per right-triangle relation of the piped. A quadruple is a solution
/// when the governing quartic vanishes; it is nondegenerate when no entry
/// is 0, 1 or -1 (an entry of 1 collapses the corresponding leg to zero).
struct SParams {
  std::array<Rational, 4> v{};

  SParams() = default;
  SParams(Rational a, Rational b, Rational c, Rational d)
      : v{std::move(a), std::move(b), std::move(c), std::move(d)} {}

  const Rational& operator[](std::size_t i) const { return v[i]; }
  Rational& operator[](std::size_t i) { return v[i]; }

  /// Parses "s1,s2,s3,s4"; surrounding whitespace per entry is tolerated.
  static SParams parse(std::string_view csv);
  std::string str() const;  // "s1,s2,s3,s4" in lowest terms

  friend bool operator==(const SParams& a, const SParams& b) { return a.v == b.v; }
  friend bool operator!=(const SParams& a, const SParams& b) { return !(a == b); }
  friend bool operator<(const SParams& a, const SParams& b) { return a.v < b.v; }

  friend std::ostream& operator<<(std::ostream& os, const SParams& s);
};

/// Left side of the governing quartic; zero exactly when s solves it.
/// Throws std::domain_error("undefined parameter") if any entry is zero.
Rational governing_residual(const SParams& s);

/// Same polynomial with no zero-entry guard. The polynomial itself is well
/// defined everywhere; the guard above exists because a zero entry has no
/// triangle interpretation.
Rational residual_polynomial(const SParams& s);

bool nondegenerate(const SParams& s);  // no entry in {0, 1, -1}

/// residual == 0 and nondegenerate. Never throws; zero entries yield false.
bool is_solution(const SParams& s);

/// Canonical orbit representative: each entry folded into (0,1] by absolute
/// value and reciprocal, then (s1,s2) and (s3,s4) each sorted ascending.
/// Only within-pair order is normalized; the two pairs play different roles
/// and are never mixed. Throws on zero entries.
SParams normalize(const SParams& s);

bool equivalent(const SParams& a, const SParams& b);

/// Feasibility of an actual piped: 0 < s_i < 1 for all i together with two
/// cubic sign conditions (one in s3, the mirror one in s4).
bool sharipov_feasible(const SParams& s);

/// All positive rational s4 completing (s1,s2,s3) to a solution. In terms
/// of t = s4^2 the governing quartic reads A t^2 + B t + A = 0 with
/// A = s1^2 s2^2 s3^2; equal leading and constant coefficients make the
/// roots reciprocal pairs, so results come in pairs (r, 1/r). Ascending.
/// Throws if s1, s2 or s3 is zero.
std::vector<Rational> solve_for_s4(const Rational& s1, const Rational& s2,
                                   const Rational& s3);

/// The 64 images of s under the symmetries of the governing quartic:
/// per-coordinate reciprocal (16 masks) x s1<->s2 x s3<->s4, fixed order.
/// Signs are preserved. Throws on zero entries.
std::vector<SParams> symmetry_orbit(const SParams& s);

}  // namespace monoclin
