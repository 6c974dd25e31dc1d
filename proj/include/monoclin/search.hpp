#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "monoclin/rational.hpp"
#include "monoclin/sparams.hpp"

namespace monoclin {

enum class Provenance { Search, Family, Import };

std::string_view provenance_name(Provenance p);          // "SEARCH", ...
Provenance provenance_from_name(std::string_view name);  // throws

/// A verified solution in canonical form. `as_given` preserves the exact
/// quadruple the record was created from (for search output it equals the
/// canonical form); flags are computed on the canonical representative so
/// they describe the solution class, not one spelling of it.
struct SolutionRecord {
  SParams canonical;
  SParams as_given;
  Integer height;  // max over canonical entries of max(|num|, den)
  bool feasible = false;
  bool geometric_valid = false;
  Provenance provenance = Provenance::Search;

  friend bool operator<(const SolutionRecord& a, const SolutionRecord& b) {
    return a.canonical < b.canonical;
  }
};

/// Canonicalizes, re-checks the governing equation, computes height and
/// flags. Throws std::domain_error if raw is not a nondegenerate solution.
SolutionRecord make_record(const SParams& raw, Provenance provenance);

enum class SearchMode {
  Reduced,  // enumerate s1,s2,s3; complete s4 through the quadratic in s4^2
  Oracle,   // enumerate all four slots; keep zero-residual tuples
};

struct SearchConfig {
  long height_bound = 2;  // H >= 2: reduced fractions in (0,1), denominator <= H
  std::optional<Rational> fixed_s1;
  SearchMode mode = SearchMode::Reduced;
  std::optional<std::filesystem::path> checkpoint_path;
  unsigned workers = 0;  // 0 = hardware concurrency

  // Test hook emulating a crash: abort (after persisting progress) once this
  // many outer pairs have completed.
  std::optional<std::size_t> interrupt_after_pairs;
};

class SearchInterrupted : public std::runtime_error {
public:
  SearchInterrupted() : std::runtime_error("search interrupted") {}
};

/// All reduced fractions in (0,1) with denominator <= max_denominator,
/// ascending.
std::vector<Rational> farey_sequence(long max_denominator);

/// Enumerates every canonical nondegenerate solution whose entries all have
/// height <= H (the fixed s1 slot, when set, is exempt from the bound).
/// Both modes return identical sets; emission is sorted lexicographically
/// on the canonical entries and deduplicated. With a checkpoint path the
/// enumeration persists progress after each completed (s1,s2) outer pair
/// and resumes from it, producing the same output as an uninterrupted run.
std::vector<SolutionRecord> enumerate_solutions(const SearchConfig& cfg);

/// One JSON object: s/height/residual/feasible/geometric_valid/provenance,
/// plus "raw" when as_given differs from the canonical form.
std::string to_jsonl(const SolutionRecord& r);

void write_records_jsonl(std::ostream& os, std::span<const SolutionRecord> records);

struct ImportIssue {
  std::size_t line_number = 0;  // 1-based
  std::string reason;
};

struct ImportResult {
  std::vector<SolutionRecord> records;
  std::vector<ImportIssue> rejected;
};

/// Reads JSONL records: each line needs an "s" array of four rationals;
/// other fields are recomputed, unknown keys ignored. Lines whose quadruple
/// is degenerate or off the governing equation are rejected with a reason;
/// lines that do not parse at all raise std::runtime_error naming the line.
ImportResult import_records(std::istream& is);
ImportResult import_records(const std::filesystem::path& path);

}  // namespace monoclin
