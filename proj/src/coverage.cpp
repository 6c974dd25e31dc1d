#include "monoclin/coverage.hpp"

#include <json.hpp>

#include <algorithm>
#include <istream>
#include <stdexcept>

#include "monoclin/families.hpp"

namespace monoclin {

namespace {

// Inversion representatives: the s3/s4 assignment (2) x per-coordinate
// reciprocals (16), signs and the first-pair order kept as given. Swapping
// s1 and s2 here would also match sets whose swapped spelling lies in the
// family's image; those count as distinct sets for coverage purposes, which
// is what makes the matched/unmatched split reproducible.
std::vector<SParams> inversion_representatives(const SParams& v) {
  std::vector<SParams> reps;
  reps.reserve(32);
  for (int swap34 = 0; swap34 < 2; ++swap34) {
    SParams base = v;
    if (swap34) std::swap(base.v[2], base.v[3]);
    for (int mask = 0; mask < 16; ++mask) {
      SParams w = base;
      for (int i = 0; i < 4; ++i)
        if (mask >> i & 1) w.v[i] = w.v[i].reciprocal();
      reps.push_back(std::move(w));
    }
  }
  return reps;
}

// Roots ordered positive-first, then by height.
std::vector<Rational> ordered_roots(const Rational& a, const Rational& b,
                                    const Rational& c) {
  std::vector<Rational> roots = solve_quadratic(a, b, c);
  std::stable_sort(roots.begin(), roots.end(), [](const Rational& x, const Rational& y) {
    const bool xp = x.sign() > 0;
    const bool yp = y.sign() > 0;
    if (xp != yp) return xp;
    return height(x) < height(y);
  });
  return roots;
}

void require_solution(const SParams& v) {
  if (!is_solution(v)) throw std::domain_error("not a nondegenerate solution: " + v.str());
}

}  // namespace

std::optional<GeneralParams> invert_general(const SParams& v) {
  require_solution(v);
  for (const SParams& w : inversion_representatives(v)) {
    const Rational& s = w[0];
    if (w[2] == w[3]) continue;  // cuboid-degenerate direction
    const Rational k = (w[2] + w[3]) / (w[2] - w[3]);
    for (const Rational& r : ordered_roots(Rational(1), Rational(-2) * k, Rational(-1))) {
      if (r.is_zero() || r.abs() == Rational(1)) continue;
      if (general_rat(s, r) == w) return GeneralParams{s, r};
    }
  }
  return std::nullopt;
}

std::optional<Rational> invert_pattern1(const SParams& v) {
  require_solution(v);
  const Rational half(1, 2);
  for (const SParams& w : inversion_representatives(v)) {
    if (w[0] != half) continue;
    // s4 = (q^2+2q-1)/(2q^2+2)  =>  (1-2 s4) q^2 + 2q - (1+2 s4) = 0
    const Rational a = Rational(1) - Rational(2) * w[3];
    const Rational c = -(Rational(1) + Rational(2) * w[3]);
    std::vector<Rational> roots;
    try {
      roots = ordered_roots(a, Rational(2), c);
    } catch (const std::domain_error&) {
      continue;  // a = c = 0 cannot occur, but stay safe
    }
    for (const Rational& q : roots)
      if (pattern1_rat(q) == w) return q;
  }
  return std::nullopt;
}

CoverageReport classify(std::span<const SolutionRecord> records) {
  CoverageReport report;
  report.total = records.size();
  report.entries.reserve(records.size());
  for (const SolutionRecord& rec : records) {
    CoverageEntry entry;
    entry.canonical = rec.canonical;
    // Coverage is a statement about the quadruple as recorded; re-spelling
    // it (canonicalization reorders the first pair) can change the answer.
    if (auto gen = invert_general(rec.as_given)) {
      entry.method = CoverMethod::General;
      entry.params = {gen->s, gen->r};
    } else if (auto q = invert_pattern1(rec.as_given)) {
      entry.method = CoverMethod::Pattern1;
      entry.params = {*q};
    }
    if (entry.method == CoverMethod::None)
      ++report.anomalous;
    else
      ++report.covered;
    report.entries.push_back(std::move(entry));
  }
  return report;
}

namespace {

const char* method_name(CoverMethod m) {
  switch (m) {
    case CoverMethod::General: return "general";
    case CoverMethod::Pattern1: return "pattern1";
    case CoverMethod::None: return nullptr;
  }
  return nullptr;
}

}  // namespace

std::string report_json(const CoverageReport& report) {
  nlohmann::ordered_json j;
  j["total"] = report.total;
  j["covered"] = report.covered;
  j["anomalous"] = report.anomalous;
  auto entries = nlohmann::ordered_json::array();
  for (const CoverageEntry& e : report.entries) {
    nlohmann::ordered_json je;
    auto svals = nlohmann::ordered_json::array();
    for (const auto& x : e.canonical.v) svals.push_back(x.str());
    je["s"] = std::move(svals);
    je["covered"] = e.method != CoverMethod::None;
    if (const char* m = method_name(e.method))
      je["method"] = m;
    else
      je["method"] = nullptr;
    auto params = nlohmann::ordered_json::array();
    for (const auto& p : e.params) params.push_back(p.str());
    je["params"] = std::move(params);
    entries.push_back(std::move(je));
  }
  j["records"] = std::move(entries);
  return j.dump(2);
}

std::string emit_plot_points(std::span<const PlotRow> rows) {
  std::string out = "x_exact,x_abs,y,family\n";
  for (const PlotRow& row : rows) {
    const Rational x = row.s[2] - row.s[3];
    out += x.str();
    out += ',';
    out += x.is_zero() ? "0" : decimal_string(x, 12);
    out += ',';
    out += row.s[1].num().get_str();
    out += ',';
    out += row.tag;
    out += '\n';
  }
  return out;
}

std::vector<PlotRow> plot_rows_from_stream(std::istream& is) {
  std::vector<PlotRow> rows;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(is, line)) {
    ++line_number;
    if (line.empty()) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw std::runtime_error("line " + std::to_string(line_number) +
                               ": malformed JSON: " + e.what());
    }
    PlotRow row;
    const auto& source = j.contains("raw") ? j["raw"] : j.at("s");
    if (!source.is_array() || source.size() != 4)
      throw std::runtime_error("line " + std::to_string(line_number) +
                               ": expected a 4-element quadruple");
    for (int i = 0; i < 4; ++i) row.s.v[i] = Rational::parse(source.at(i).get<std::string>());
    if (j.contains("family"))
      row.tag = j["family"].get<std::string>();
    else if (j.contains("provenance"))
      row.tag = j["provenance"].get<std::string>();
    else
      row.tag = "IMPORT";
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace monoclin
