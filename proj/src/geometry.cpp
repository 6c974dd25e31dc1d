#include "monoclin/geometry.hpp"

#include <stdexcept>

namespace monoclin {

RationalTriple s_to_triple(const Rational& s) {
  if (s.is_zero()) throw std::domain_error("undefined parameter");
  const Rational s2 = s.squared();
  const Rational two_s = Rational(2) * s;
  return {(Rational(1) - s2) / two_s, (Rational(1) + s2) / two_s, s};
}

Rational recover_s(const Rational& u, const Rational& v) {
  if (Rational(1) + u.squared() != v.squared())
    throw std::domain_error("not a rational Pythagorean pair");
  return v - u;
}

RationalPiped reconstruct(const SParams& s) {
  if (!is_solution(s)) throw std::domain_error("governing equation violated");
  const RationalTriple t1 = s_to_triple(s[0]);
  const RationalTriple t2 = s_to_triple(s[1]);
  const RationalTriple t3 = s_to_triple(s[2]);
  const RationalTriple t4 = s_to_triple(s[3]);
  return {Rational(1), t1.u.abs(), t2.u.abs(), t1.v.abs(), t2.v.abs(),
          t3.u.abs(), t4.u.abs(), t3.v.abs(), t4.v.abs()};
}

namespace {

Integer lcm_int(const Integer& a, const Integer& b) {
  Integer out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

Integer gcd_int(const Integer& a, const Integer& b) {
  Integer out;
  mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

template <typename P>
std::array<const decltype(P::x)*, 9> fields(const P& p) {
  return {&p.x, &p.y, &p.z, &p.a, &p.b, &p.c1, &p.c2, &p.d1, &p.d2};
}

template <typename T>
bool check_equations(const std::array<const T*, 9>& f) {
  const T& x = *f[0];
  const T& y = *f[1];
  const T& z = *f[2];
  const T& a = *f[3];
  const T& b = *f[4];
  const T& c1 = *f[5];
  const T& c2 = *f[6];
  const T& d1 = *f[7];
  const T& d2 = *f[8];
  const T two(2);
  return x * x + y * y == a * a && x * x + z * z == b * b &&
         x * x + c1 * c1 == d1 * d1 && x * x + c2 * c2 == d2 * d2 &&
         two * y * y + two * z * z == c1 * c1 + c2 * c2 &&
         two * y * y + two * b * b == d1 * d1 + d2 * d2 &&
         two * a * a + two * z * z == d1 * d1 + d2 * d2;
}

}  // namespace

IntegerPiped integerize(const RationalPiped& p) {
  const auto f = fields(p);
  Integer scale(1);
  for (const Rational* r : f) scale = lcm_int(scale, r->den());
  std::array<Integer, 9> vals;
  for (int i = 0; i < 9; ++i) {
    const Rational scaled = *f[i] * Rational(scale);
    vals[i] = scaled.num();  // scaled.den() == 1 by construction
  }
  Integer g(0);
  for (const Integer& v : vals) g = gcd_int(g, v);
  if (g > 1)
    for (Integer& v : vals) v /= g;
  IntegerPiped out{vals[0], vals[1], vals[2], vals[3], vals[4],
                   vals[5], vals[6], vals[7], vals[8], true};
  return out;
}

std::string IntegerPiped::str() const {
  std::string out = x.get_str();
  for (const Integer* v : {&y, &z, &a, &b, &c1, &c2, &d1, &d2}) {
    out += ' ';
    out += v->get_str();
  }
  return out;
}

bool validate_algebraic(const RationalPiped& p) { return check_equations(fields(p)); }
bool validate_algebraic(const IntegerPiped& p) { return check_equations(fields(p)); }

namespace {

Rational cos_from(const Rational& y, const Rational& z, const Rational& c1,
                  const Rational& c2) {
  if (y.is_zero() || z.is_zero()) throw std::domain_error("degenerate face");
  return (c2.squared() - c1.squared()) / (Rational(4) * y * z);
}

}  // namespace

Rational cos_angle(const RationalPiped& p) { return cos_from(p.y, p.z, p.c1, p.c2); }

Rational cos_angle(const IntegerPiped& p) {
  return cos_from(Rational(p.y), Rational(p.z), Rational(p.c1), Rational(p.c2));
}

namespace {

template <typename P, typename T>
bool geometric_valid(const P& p, const T& /*tag*/) {
  for (const auto* v : fields(p))
    if (!(*v > T(0))) return false;
  const Rational c = cos_angle(p);
  return c.abs() < Rational(1);
}

RationalityFlags flags_from_cos(const Rational& c) {
  const Rational sin2 = Rational(1) - c.squared();
  const bool rational_sin = rat_sqrt(sin2).has_value();
  return {rational_sin, rational_sin, rational_sin};
}

}  // namespace

bool validate_geometric(const RationalPiped& p) { return geometric_valid(p, Rational(0)); }
bool validate_geometric(const IntegerPiped& p) { return geometric_valid(p, Integer(0)); }

RationalityFlags rational_area_volume_lattice(const RationalPiped& p) {
  if (!validate_geometric(p)) throw std::domain_error("geometrically invalid piped");
  return flags_from_cos(cos_angle(p));
}

RationalityFlags rational_area_volume_lattice(const IntegerPiped& p) {
  if (!validate_geometric(p)) throw std::domain_error("geometrically invalid piped");
  return flags_from_cos(cos_angle(p));
}

}  // namespace monoclin
