#include "monoclin/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace monoclin {

Rational::Rational(const Integer& num, const Integer& den) : q_(num, den) {
  if (den == 0) throw std::domain_error("zero denominator");
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto bad = [&] {
    return std::invalid_argument("malformed rational: \"" + std::string(text) + "\"");
  };
  if (text.empty()) throw bad();

  auto scan_int = [&](std::string_view part) {
    std::size_t i = part.starts_with('-') ? 1 : 0;
    if (i == part.size()) throw bad();
    for (; i < part.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) throw bad();
  };

  const auto slash = text.find('/');
  scan_int(text.substr(0, slash));
  if (slash != std::string_view::npos) scan_int(text.substr(slash + 1));

  mpq_class q;
  if (mpq_set_str(q.get_mpq_t(), std::string(text).c_str(), 10) != 0) throw bad();
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: \"" + std::string(text) + "\"");
  q.canonicalize();
  Rational r;
  r.q_ = q;
  return r;
}

Rational Rational::abs() const {
  Rational r;
  r.q_ = ::abs(q_);
  return r;
}

Rational Rational::squared() const {
  Rational r;
  r.q_ = q_ * q_;
  return r;
}

Rational Rational::reciprocal() const {
  if (is_zero()) throw std::domain_error("reciprocal of zero");
  Rational r;
  r.q_ = 1 / q_;
  return r;
}

std::string Rational::str() const { return q_.get_str(); }

Rational operator-(const Rational& x) {
  Rational r;
  r.q_ = -x.q_;
  return r;
}

Rational operator+(const Rational& x, const Rational& y) {
  Rational r;
  r.q_ = x.q_ + y.q_;
  return r;
}

Rational operator-(const Rational& x, const Rational& y) {
  Rational r;
  r.q_ = x.q_ - y.q_;
  return r;
}

Rational operator*(const Rational& x, const Rational& y) {
  Rational r;
  r.q_ = x.q_ * y.q_;
  return r;
}

Rational operator/(const Rational& x, const Rational& y) {
  if (y.is_zero()) throw std::domain_error("division by zero");
  Rational r;
  r.q_ = x.q_ / y.q_;
  return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.str(); }

Integer height(const Rational& x) {
  Integer n = ::abs(x.num());
  Integer d = x.den();
  return n > d ? n : d;
}

Integer floor_sqrt(const Integer& n) {
  if (n < 0) throw std::domain_error("floor_sqrt of negative");
  return sqrt(n);
}

bool is_perfect_square(const Integer& n) {
  if (n < 0) return false;
  return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

std::optional<Rational> rat_sqrt(const Rational& x) {
  if (x.sign() < 0) return std::nullopt;
  const Integer p = x.num();
  const Integer q = x.den();
  if (!is_perfect_square(p) || !is_perfect_square(q)) return std::nullopt;
  return Rational(floor_sqrt(p), floor_sqrt(q));
}

std::vector<Rational> solve_quadratic(const Rational& a, const Rational& b,
                                      const Rational& c) {
  if (a.is_zero() && b.is_zero()) {
    if (c.is_zero()) throw std::domain_error("degenerate identity");
    return {};
  }
  if (a.is_zero()) return {-c / b};

  const Rational disc = b * b - Rational(4) * a * c;
  const auto root = rat_sqrt(disc);
  if (!root) return {};
  if (root->is_zero()) return {-b / (Rational(2) * a)};
  const Rational two_a = Rational(2) * a;
  return {(-b + *root) / two_a, (-b - *root) / two_a};
}

std::string decimal_string(const Rational& x, int significant_digits) {
  if (x.is_zero()) return "0";
  const Rational v = x.abs();
  const Integer p = v.num();
  const Integer q = v.den();

  // Decimal exponent e with 10^e <= v < 10^(e+1).
  long e = static_cast<long>(p.get_str().size()) - static_cast<long>(q.get_str().size());
  Integer pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(e < 0 ? -e : e));
  if (e >= 0) {
    if (p < q * pow10) --e;
  } else {
    if (p * pow10 >= q) ++e;
  }

  // scaled = round(v * 10^(digits-1-e)), giving exactly `digits` digits
  // unless rounding carries into 10^digits.
  const long shift = significant_digits - 1 - e;
  Integer num = p;
  Integer den = q;
  Integer tens;
  mpz_ui_pow_ui(tens.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
  if (shift >= 0)
    num *= tens;
  else
    den *= tens;
  Integer quot, rem;
  mpz_fdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (2 * rem >= den) ++quot;

  std::string digits = quot.get_str();
  if (static_cast<int>(digits.size()) == significant_digits + 1) {
    // carry: quot == 10^digits
    digits = digits.substr(0, significant_digits);
    ++e;
  }

  std::string out;
  out += digits[0];
  out += '.';
  out += digits.substr(1);
  out += 'e';
  out += (e < 0 ? '-' : '+');
  const long ea = e < 0 ? -e : e;
  if (ea < 10) out += '0';
  out += std::to_string(ea);
  return out;
}

}  // namespace monoclin
