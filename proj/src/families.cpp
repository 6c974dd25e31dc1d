#include "monoclin/families.hpp"

#include <json.hpp>

#include <stdexcept>
#include <utility>

namespace monoclin {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 12> kFamilyNames{{
    {Family::P1Set1, "P1_SET1"},
    {Family::P1Set2, "P1_SET2"},
    {Family::P1Set3, "P1_SET3"},
    {Family::P1Set4, "P1_SET4"},
    {Family::P1Int, "P1_INT"},
    {Family::P1Rat, "P1_RAT"},
    {Family::P2Int, "P2_INT"},
    {Family::P2Rat, "P2_RAT"},
    {Family::GenInt, "GEN_INT"},
    {Family::GenRat, "GEN_RAT"},
    {Family::Obtuse, "OBTUSE"},
    {Family::Acute, "ACUTE"},
}};

}  // namespace

std::string_view family_name(Family f) {
  for (const auto& [fam, name] : kFamilyNames)
    if (fam == f) return name;
  throw std::logic_error("unknown family");
}

Family family_from_name(std::string_view name) {
  for (const auto& [fam, n] : kFamilyNames)
    if (n == name) return fam;
  throw std::invalid_argument("unknown family name: \"" + std::string(name) + "\"");
}

FamilyPoint make_family_point(Family family, std::vector<Rational> params,
                              const SParams& s) {
  if (!residual_polynomial(s).is_zero())
    throw std::logic_error("family generator produced a non-solution: " + s.str());
  FamilyPoint p;
  p.family = family;
  p.params = std::move(params);
  p.s = s;
  p.degenerate = !nondegenerate(s);
  bool has_zero = false;
  for (const auto& x : s.v) has_zero = has_zero || x.is_zero();
  p.canonical = has_zero ? s : normalize(s);
  p.feasible = !p.degenerate && sharipov_feasible(p.canonical);
  return p;
}

std::string to_jsonl(const FamilyPoint& p) {
  nlohmann::ordered_json j;
  j["family"] = std::string(family_name(p.family));
  auto rats = nlohmann::ordered_json::array();
  for (const auto& x : p.params) rats.push_back(x.str());
  j["params"] = std::move(rats);
  auto svals = nlohmann::ordered_json::array();
  for (const auto& x : p.s.v) svals.push_back(x.str());
  j["s"] = std::move(svals);
  auto cvals = nlohmann::ordered_json::array();
  for (const auto& x : p.canonical.v) cvals.push_back(x.str());
  j["canonical"] = std::move(cvals);
  j["feasible"] = p.feasible;
  if (p.degenerate) j["degenerate"] = true;
  return j.dump();
}

Sum2SquaresTriple sum2squares_param(const Integer& m, const Integer& n) {
  if (m == 0 && n == 0) throw std::domain_error("degenerate parameter pair");
  const Integer mn2 = 2 * m * n;
  const Integer m2 = m * m;
  const Integer n2 = n * n;
  return {mn2 + m2 - n2, mn2 + n2 - m2, m2 + n2};
}

std::array<SParams, 4> pattern1_four_sets(const Integer& m, const Integer& n) {
  if (m * n == 0 || m * m == n * n) throw std::domain_error("degenerate parameter pair");
  const Integer mn2 = 2 * m * n;
  const Integer m2 = m * m;
  const Integer n2 = n * n;
  const Integer A = mn2 + m2 - n2;  // 2mn+m^2-n^2
  const Integer B = mn2 + n2 - m2;  // 2mn+n^2-m^2
  const Integer G = 2 * (m2 + n2);
  const Rational half(1, 2);
  return {
      SParams(half, Rational(B, A), Rational(B, G), Rational(A, G)),
      SParams(half, Rational(A, B), Rational(A, G), Rational(B, G)),
      SParams(half, Rational(A, B), Rational(G, B), Rational(G, A)),
      SParams(half, Rational(B, A), Rational(G, A), Rational(G, B)),
  };
}

SParams pattern1_rat(const Rational& q) {
  const Rational q2 = q.squared();
  const Rational p = -q2 + Rational(2) * q + Rational(1);
  const Rational m = q2 + Rational(2) * q - Rational(1);
  const Rational g = Rational(2) * q2 + Rational(2);
  return SParams(Rational(1, 2), p / m, p / g, m / g);
}

SParams pattern2_int(const Integer& m, const Integer& n) {
  const Integer den = 8 * n * m * m * m - 8 * n * n * n * m;
  if (den == 0) throw std::domain_error("degenerate parameter pair");
  const Integer m2 = m * m, n2 = n * n;
  const Integer m3 = m2 * m, n3 = n2 * n;
  const Integer m4 = m2 * m2, n4 = n2 * n2;
  return SParams(Rational(1, 2), Rational(-3 * m4 + 18 * n2 * m2 - 3 * n4, den),
                 Rational(3 * m4 + 6 * n * m3 + 6 * n3 * m - 3 * n4, den),
                 Rational(3 * m4 - 6 * n * m3 - 6 * n3 * m - 3 * n4, den));
}

SParams pattern2_rat(const Rational& q) {
  const Rational q2 = q.squared();
  const Rational q3 = q2 * q;
  const Rational q4 = q2 * q2;
  const Rational den = Rational(8) * q3 - Rational(8) * q;
  if (den.is_zero()) throw std::domain_error("degenerate parameter");
  return SParams(Rational(1, 2),
                 (Rational(-3) * q4 + Rational(18) * q2 - Rational(3)) / den,
                 (Rational(3) * q4 + Rational(6) * q3 + Rational(6) * q - Rational(3)) / den,
                 (Rational(3) * q4 - Rational(6) * q3 - Rational(6) * q - Rational(3)) / den);
}

SParams general_int(const Integer& r, const Integer& s, const Integer& m,
                    const Integer& n) {
  const Integer den = 4 * s * r * n * m * m * m - 4 * s * r * n * n * n * m;
  if (den == 0) throw std::domain_error("degenerate parameter");
  const Integer r2 = r * r, s2 = s * s;
  const Integer m2 = m * m, n2 = n * n;
  const Integer m3 = m2 * m, n3 = n2 * n;
  const Integer m4 = m2 * m2, n4 = n2 * n2;
  const Integer d2 = (r2 - s2) * m4 + (-6 * r2 + 6 * s2) * n2 * m2 + (r2 - s2) * n4;
  const Integer d3 = (-r2 + s2) * m4 + (-2 * r2 + 2 * s2) * n * m3 +
                     (-2 * r2 + 2 * s2) * n3 * m + (r2 - s2) * n4;
  const Integer d4 = (r2 - s2) * m4 + (-2 * r2 + 2 * s2) * n * m3 +
                     (-2 * r2 + 2 * s2) * n3 * m + (-r2 + s2) * n4;
  return SParams(Rational(r, s), Rational(d2, den), Rational(d3, den), Rational(d4, -den));
}

SParams general_rat(const Rational& s, const Rational& r) {
  const Rational s2 = s.squared();
  const Rational r2 = r.squared();
  const Rational r3 = r2 * r;
  const Rational r4 = r2 * r2;
  const Rational den = Rational(4) * s * r3 - Rational(4) * s * r;
  if (den.is_zero()) throw std::domain_error("degenerate parameter");
  const Rational w = s2 - Rational(1);
  const Rational n2 = w * r4 + Rational(-6) * w * r2 + w;
  const Rational n3 = -w * r4 + Rational(-2) * w * r3 + Rational(-2) * w * r + w;
  const Rational n4 = w * r4 + Rational(-2) * w * r3 + Rational(-2) * w * r - w;
  return SParams(s, n2 / den, n3 / den, n4 / -den);
}

Rational t_general(const Rational& s, const Rational& r) {
  const Rational r2 = r.squared();
  const Rational den = s * r2 - s;
  if (r.is_zero() || den.is_zero()) throw std::domain_error("degenerate parameter");
  const Rational w = Rational(1) - s.squared();
  return (w * r2 + w) / den;
}

}  // namespace monoclin
