#pragma once

#include <string>

#include "monoclin/rational.hpp"
#include "monoclin/sparams.hpp"

namespace monoclin {

/// Leg/hypotenuse pair of a rational right triangle with unit short side:
/// 1 + u^2 = v^2 and v - u = s exactly.
struct RationalTriple {
  Rational u;
  Rational v;
  Rational s;
};

/// u = (1-s^2)/(2s), v = (1+s^2)/(2s). Throws on s = 0.
RationalTriple s_to_triple(const Rational& s);

/// s = v - u. Throws std::domain_error("not a rational Pythagorean pair")
/// unless 1 + u^2 = v^2.
Rational recover_s(const Rational& u, const Rational& v);

/// Nine lengths of the piped scaled so the orthogonal edge x is 1.
/// x,y,z are the edges; a and b the diagonals of the two (x,·) rectangles;
/// c1,c2 the diagonals of the skewed (y,z) face; d1,d2 the body diagonals.
struct RationalPiped {
  Rational x, y, z, a, b, c1, c2, d1, d2;
};

/// Same lengths as coprime positive integers.
struct IntegerPiped {
  Integer x, y, z, a, b, c1, c2, d1, d2;
  bool primitive = false;

  std::string str() const;  // "x y z a b c1 c2 d1 d2"
};

/// Builds the piped from a solution: x = 1, (y,a) and (z,b) from the first
/// two triangle parameters, (c1,d1) and (c2,d2) from the last two. Lengths
/// take absolute values since only squares are constrained. Throws
/// std::domain_error("governing equation violated") when s is not a
/// nondegenerate solution.
RationalPiped reconstruct(const SParams& s);

/// Clears denominators by their lcm and divides out the common gcd.
IntegerPiped integerize(const RationalPiped& p);

/// The seven defining length equations, checked exactly.
bool validate_algebraic(const RationalPiped& p);
bool validate_algebraic(const IntegerPiped& p);

/// Cosine of the skew angle in the (y,z) face, (c2^2 - c1^2)/(4yz), with
/// the convention that c1 is the diagonal subtending the angle. Throws when
/// y z = 0.
Rational cos_angle(const RationalPiped& p);
Rational cos_angle(const IntegerPiped& p);

/// All nine lengths positive and |cos| < 1 (strict triangle inequalities in
/// the skew face). Algebraic validity does not imply this.
bool validate_geometric(const RationalPiped& p);
bool validate_geometric(const IntegerPiped& p);

struct RationalityFlags {
  bool area_rational = false;
  bool volume_rational = false;
  bool lattice_embeddable = false;
};

/// Whether the skew-face area (y z sin), the volume (x y z sin) and a
/// rational-lattice embedding exist over Q. With cos rational all three
/// reduce to sin being rational, so the flags always agree. Throws on a
/// geometrically invalid piped.
RationalityFlags rational_area_volume_lattice(const RationalPiped& p);
RationalityFlags rational_area_volume_lattice(const IntegerPiped& p);

}  // namespace monoclin
