#include "monoclin/sparams.hpp"

#include <algorithm>
#include <stdexcept>

namespace monoclin {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

SParams SParams::parse(std::string_view csv) {
  SParams out;
  std::size_t pos = 0;
  for (int i = 0; i < 4; ++i) {
    const bool last = i == 3;
    const auto comma = csv.find(',', pos);
    if (last != (comma == std::string_view::npos))
      throw std::invalid_argument("expected four comma-separated rationals: \"" +
                                  std::string(csv) + "\"");
    out.v[i] = Rational::parse(trim(csv.substr(pos, last ? std::string_view::npos : comma - pos)));
    pos = comma + 1;
  }
  return out;
}

std::string SParams::str() const {
  return v[0].str() + "," + v[1].str() + "," + v[2].str() + "," + v[3].str();
}

std::ostream& operator<<(std::ostream& os, const SParams& s) {
  return os << '[' << s.str() << ']';
}

Rational residual_polynomial(const SParams& s) {
  const Rational a = s[0].squared();
  const Rational b = s[1].squared();
  const Rational c = s[2].squared();
  const Rational d = s[3].squared();
  const Rational abcd = a * b * c * d;
  return abcd * c + abcd * d - Rational(2) * a * abcd - Rational(2) * b * abcd +
         Rational(4) * abcd - Rational(2) * a * c * d - Rational(2) * b * c * d +
         a * b * c + a * b * d;
}

Rational governing_residual(const SParams& s) {
  for (const auto& x : s.v)
    if (x.is_zero()) throw std::domain_error("undefined parameter");
  return residual_polynomial(s);
}

bool nondegenerate(const SParams& s) {
  for (const auto& x : s.v) {
    if (x.is_zero()) return false;
    if (x.abs() == Rational(1)) return false;
  }
  return true;
}

bool is_solution(const SParams& s) {
  for (const auto& x : s.v)
    if (x.is_zero()) return false;
  return nondegenerate(s) && residual_polynomial(s).is_zero();
}

namespace {

Rational fold_unit(const Rational& x) {
  Rational a = x.abs();
  return a > Rational(1) ? a.reciprocal() : a;
}

}  // namespace

SParams normalize(const SParams& s) {
  for (const auto& x : s.v)
    if (x.is_zero()) throw std::domain_error("undefined parameter");
  SParams n(fold_unit(s[0]), fold_unit(s[1]), fold_unit(s[2]), fold_unit(s[3]));
  if (n[1] < n[0]) std::swap(n.v[0], n.v[1]);
  if (n[3] < n[2]) std::swap(n.v[2], n.v[3]);
  return n;
}

bool equivalent(const SParams& a, const SParams& b) {
  for (const auto& x : a.v)
    if (x.is_zero()) return a == b;
  for (const auto& x : b.v)
    if (x.is_zero()) return a == b;
  return normalize(a) == normalize(b);
}

namespace {

// x y^2 z + x^2 y z - x y z^2 + x y - y z - x z
Rational feasibility_cubic(const Rational& x, const Rational& y, const Rational& z) {
  return x * y * y * z + x * x * y * z - x * y * z * z + x * y - y * z - x * z;
}

}  // namespace

bool sharipov_feasible(const SParams& s) {
  const Rational zero(0), one(1);
  for (const auto& x : s.v)
    if (!(zero < x && x < one)) return false;
  return feasibility_cubic(s[0], s[1], s[2]).sign() < 0 &&
         feasibility_cubic(s[0], s[1], s[3]).sign() < 0;
}

std::vector<Rational> solve_for_s4(const Rational& s1, const Rational& s2,
                                   const Rational& s3) {
  if (s1.is_zero() || s2.is_zero() || s3.is_zero())
    throw std::domain_error("undefined parameter");
  const Rational a = s1.squared();
  const Rational b = s2.squared();
  const Rational c = s3.squared();
  const Rational A = a * b * c;
  const Rational B = a * b * c * c + a * b + Rational(4) * A - Rational(2) * a * A -
                     Rational(2) * b * A - Rational(2) * a * c - Rational(2) * b * c;
  std::vector<Rational> out;
  for (const Rational& t : solve_quadratic(A, B, A)) {
    if (t.sign() <= 0) continue;
    if (auto r = rat_sqrt(t)) out.push_back(*r);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<SParams> symmetry_orbit(const SParams& s) {
  for (const auto& x : s.v)
    if (x.is_zero()) throw std::domain_error("undefined parameter");
  std::vector<SParams> reps;
  reps.reserve(64);
  for (int swap12 = 0; swap12 < 2; ++swap12) {
    for (int swap34 = 0; swap34 < 2; ++swap34) {
      SParams base = s;
      if (swap12) std::swap(base.v[0], base.v[1]);
      if (swap34) std::swap(base.v[2], base.v[3]);
      for (int mask = 0; mask < 16; ++mask) {
        SParams w = base;
        for (int i = 0; i < 4; ++i)
          if (mask >> i & 1) w.v[i] = w.v[i].reciprocal();
        reps.push_back(std::move(w));
      }
    }
  }
  return reps;
}

}  // namespace monoclin
