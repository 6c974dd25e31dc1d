#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "monoclin/rational.hpp"
#include "monoclin/search.hpp"
#include "monoclin/sparams.hpp"

namespace monoclin {

struct GeneralParams {
  Rational s;
  Rational r;
};

/// Recovers (s, r) with general_rat(s, r) reproducing some representative of
/// v verbatim, where representatives range over per-coordinate reciprocals
/// and the s3/s4 assignment of v as given (signs kept, first pair not
/// swapped; see invert notes in the implementation). For a representative
/// w: s = w1, k = (w3+w4)/(w3-w4), r solves r^2 - 2kr - 1 = 0; the root
/// with positive numerator is preferred. Empty when no representative is
/// reproduced exactly; requires is_solution(v).
std::optional<GeneralParams> invert_general(const SParams& v);

/// Same idea against the one-parameter first-pattern form: a representative
/// with w1 = 1/2 and pattern1_rat(q) == w, q solved from the w4 slot.
std::optional<Rational> invert_pattern1(const SParams& v);

enum class CoverMethod { General, Pattern1, None };

struct CoverageEntry {
  SParams canonical;
  CoverMethod method = CoverMethod::None;
  std::vector<Rational> params;
};

struct CoverageReport {
  std::size_t total = 0;
  std::size_t covered = 0;
  std::size_t anomalous = 0;
  std::vector<CoverageEntry> entries;  // input order
};

/// Partitions records into covered (either inversion succeeds on the
/// as-given quadruple) and anomalous.
CoverageReport classify(std::span<const SolutionRecord> records);

std::string report_json(const CoverageReport& report);

/// One plot row per record: exact x = s3 - s4 of the as-generated
/// quadruple, |x| as a 12-significant-digit decimal, y = numerator of the
/// reduced s2, and a source tag. x = 0 rows (the cuboid direction) render
/// x_abs as "0" so log-scale consumers can drop them.
struct PlotRow {
  SParams s;
  std::string tag;
};

/// CSV with header "x_exact,x_abs,y,family".
std::string emit_plot_points(std::span<const PlotRow> rows);

/// Builds plot rows from JSONL produced by either the family generators
/// (uses the as-printed "s" and the family tag) or the record writer (uses
/// "raw" when present, else "s"; tagged by provenance).
std::vector<PlotRow> plot_rows_from_stream(std::istream& is);

}  // namespace monoclin
