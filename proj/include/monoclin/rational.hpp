#pragma once

#include <gmpxx.h>

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace monoclin {

using Integer = mpz_class;

/// Exact rational number, always stored reduced with a positive denominator.
/// Every scalar in this library is a Rational; there is no floating point
/// anywhere on a computation path.
class Rational {
public:
  Rational() : q_(0) {}
  Rational(long n) : q_(n) {}
  Rational(const Integer& n) : q_(n) {}
  Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}
  Rational(const Integer& num, const Integer& den);

  /// Parses "p/q" or "p" (base 10, optional leading '-'). Throws
  /// std::invalid_argument on malformed text or a zero denominator.
  static Rational parse(std::string_view text);

  Integer num() const { return q_.get_num(); }
  Integer den() const { return q_.get_den(); }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  Rational abs() const;
  Rational squared() const;
  Rational reciprocal() const;  // throws std::domain_error on zero

  /// Lowest-terms text form: "p/q" with q > 1, otherwise just "p".
  std::string str() const;

  friend Rational operator-(const Rational& x);
  friend Rational operator+(const Rational& x, const Rational& y);
  friend Rational operator-(const Rational& x, const Rational& y);
  friend Rational operator*(const Rational& x, const Rational& y);
  friend Rational operator/(const Rational& x, const Rational& y);

  Rational& operator+=(const Rational& x) { return *this = *this + x; }
  Rational& operator-=(const Rational& x) { return *this = *this - x; }
  Rational& operator*=(const Rational& x) { return *this = *this * x; }
  Rational& operator/=(const Rational& x) { return *this = *this / x; }

  friend bool operator==(const Rational& x, const Rational& y) { return x.q_ == y.q_; }
  friend bool operator!=(const Rational& x, const Rational& y) { return x.q_ != y.q_; }
  friend bool operator<(const Rational& x, const Rational& y) { return x.q_ < y.q_; }
  friend bool operator>(const Rational& x, const Rational& y) { return x.q_ > y.q_; }
  friend bool operator<=(const Rational& x, const Rational& y) { return x.q_ <= y.q_; }
  friend bool operator>=(const Rational& x, const Rational& y) { return x.q_ >= y.q_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& x);

private:
  mpq_class q_;
};

/// max(|numerator|, denominator) of the reduced fraction.
Integer height(const Rational& x);

Integer floor_sqrt(const Integer& n);  // n >= 0
bool is_perfect_square(const Integer& n);

/// The nonnegative rational square root when one exists (numerator and
/// denominator must both be perfect squares); empty otherwise, including
/// for negative input.
std::optional<Rational> rat_sqrt(const Rational& x);

/// All rational roots of a t^2 + b t + c = 0, larger-discriminant root
/// first, i.e. (-b + sqrt(D))/(2a) before (-b - sqrt(D))/(2a). Degrades to
/// the linear equation when a = 0; a = b = 0, c != 0 yields no roots.
/// Throws std::domain_error("degenerate identity") when a = b = c = 0.
std::vector<Rational> solve_quadratic(const Rational& a, const Rational& b,
                                      const Rational& c);

/// |x| rendered in normalized scientific notation with the given number of
/// significant digits, rounded half away from zero ("2.74285714286e+00").
/// Exact bignum conversion; zero renders as "0".
std::string decimal_string(const Rational& x, int significant_digits = 12);

}  // namespace monoclin
