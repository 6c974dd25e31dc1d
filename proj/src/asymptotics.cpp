#include "monoclin/asymptotics.hpp"

#include <stdexcept>

namespace monoclin {

SParams obtuse(const Integer& n) {
  if (n <= 1) throw std::domain_error("degenerate parameter");
  const Integer n2 = n * n;
  const Integer n3 = n2 * n;
  const Integer n4 = n2 * n2;
  const Integer g = 4 * n4 - 8 * n3 + 4 * n2;  // 4n^2(n-1)^2
  return SParams(Rational(n - 1, n), Rational(4 * n4 - 8 * n3 + 4 * n - 1, g),
                 Rational(4 * n4 - 12 * n3 + 12 * n2 - 6 * n + 1, g),
                 Rational(g, 4 * n4 - 4 * n3 + 2 * n - 1));
}

Rational obtuse_t(const Integer& n) {
  if (n <= 1) throw std::domain_error("degenerate parameter");
  const Integer k = 2 * n - 1;
  const Integer num = k * k * k * k;
  const Integer den =
      4 * (n - 1) * (n - 1) * n * n * (2 * n * n - 1) * (2 * n * n - 2 * n + 1);
  return Rational(-num, den);
}

namespace {

void check_acute_args(const Integer& d, const Integer& n) {
  if (d <= 1 || n <= 1) throw std::domain_error("degenerate parameter");
}

}  // namespace

SParams acute(const Integer& d, const Integer& n) {
  check_acute_args(d, n);
  const Rational k(4 * d * n * (n + 1) * (n + 2), (d - 1) * (d + 1));
  const Integer a = n * n - 2;
  const Integer b = n * n + 2 * n + 2;
  const Integer c = n * n + 4 * n + 2;
  return SParams(Rational(Integer(1), d), k / Rational(a * c), k / Rational(a * b),
                 k / Rational(b * c));
}

Rational acute_t(const Integer& d, const Integer& n) {
  check_acute_args(d, n);
  const Integer num = 16 * d * n * (n + 1) * (n + 1) * (n + 2);
  const Integer den = (d - 1) * (d + 1) * (n * n - 2) * (n * n + 2 * n + 2) *
                      (n * n + 4 * n + 2);
  return Rational(num, den);
}

Rational acute_coefficient(const Integer& d) {
  if (d <= 1) throw std::domain_error("degenerate parameter");
  return Rational(4 * d, (d - 1) * (d + 1));
}

}  // namespace monoclin
