#include "monoclin/search.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <set>
#include <thread>

#include "monoclin/geometry.hpp"

namespace monoclin {

std::string_view provenance_name(Provenance p) {
  switch (p) {
    case Provenance::Search: return "SEARCH";
    case Provenance::Family: return "FAMILY";
    case Provenance::Import: return "IMPORT";
  }
  throw std::logic_error("unknown provenance");
}

Provenance provenance_from_name(std::string_view name) {
  if (name == "SEARCH") return Provenance::Search;
  if (name == "FAMILY") return Provenance::Family;
  if (name == "IMPORT") return Provenance::Import;
  throw std::invalid_argument("unknown provenance: \"" + std::string(name) + "\"");
}

SolutionRecord make_record(const SParams& raw, Provenance provenance) {
  if (!is_solution(raw))
    throw std::domain_error("not a nondegenerate solution: " + raw.str());
  SolutionRecord rec;
  rec.as_given = raw;
  rec.canonical = normalize(raw);
  if (!governing_residual(rec.canonical).is_zero())
    throw std::logic_error("canonical form lost the solution property");
  rec.height = 0;
  for (const auto& x : rec.canonical.v) {
    Integer h = monoclin::height(x);
    if (h > rec.height) rec.height = h;
  }
  rec.feasible = sharipov_feasible(rec.canonical);
  rec.geometric_valid = validate_geometric(reconstruct(rec.canonical));
  rec.provenance = provenance;
  return rec;
}

std::vector<Rational> farey_sequence(long max_denominator) {
  if (max_denominator < 1) throw std::invalid_argument("height bound must be >= 1");
  // Farey neighbor recurrence starting from 0/1, 1/H; endpoints excluded.
  std::vector<Rational> out;
  long a = 0, b = 1, c = 1, d = max_denominator;
  while (!(c == 1 && d == 1)) {
    out.emplace_back(c, d);
    const long k = (max_denominator + b) / d;
    const long c2 = k * c - a;
    const long d2 = k * d - b;
    a = c;
    b = d;
    c = c2;
    d = d2;
  }
  return out;
}

namespace {

struct PairTask {
  Rational s1;
  Rational s2;
};

// Candidate tuple -> canonical record, applying the height bound to every
// slot except a fixed s1.
void consider(const SParams& tuple, const Integer& bound, bool s4_needs_bound,
              std::vector<SParams>& out) {
  if (!nondegenerate(tuple)) return;
  if (s4_needs_bound) {
    Rational folded = tuple[3].abs();
    if (folded > Rational(1)) folded = folded.reciprocal();
    if (height(folded) > bound) return;
  }
  if (!residual_polynomial(tuple).is_zero()) return;
  out.push_back(normalize(tuple));
}

std::vector<SParams> run_pair(const PairTask& pair, const std::vector<Rational>& grid,
                              SearchMode mode, const Integer& bound) {
  std::vector<SParams> found;
  for (const Rational& s3 : grid) {
    if (mode == SearchMode::Reduced) {
      for (const Rational& s4 : solve_for_s4(pair.s1, pair.s2, s3))
        consider(SParams(pair.s1, pair.s2, s3, s4), bound, /*s4_needs_bound=*/true, found);
    } else {
      for (const Rational& s4 : grid)
        consider(SParams(pair.s1, pair.s2, s3, s4), bound, /*s4_needs_bound=*/false, found);
    }
  }
  return found;
}

std::string checkpoint_line(const PairTask& pair) {
  return "s1=" + pair.s1.str() + " s2=" + pair.s2.str();
}

std::optional<std::string> read_checkpoint(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::string line;
  std::getline(in, line);
  if (line.empty()) return std::nullopt;
  return line;
}

void write_checkpoint(const std::filesystem::path& path, const std::string& line) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write checkpoint: " + path.string());
    out << line << '\n';
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace

std::vector<SolutionRecord> enumerate_solutions(const SearchConfig& cfg) {
  if (cfg.height_bound < 2) throw std::invalid_argument("height bound must be >= 2");
  if (cfg.fixed_s1 &&
      !(Rational(0) < *cfg.fixed_s1 && *cfg.fixed_s1 < Rational(1)))
    throw std::invalid_argument("fixed s1 must lie in (0,1)");

  const std::vector<Rational> grid = farey_sequence(cfg.height_bound);
  const Integer bound(cfg.height_bound);

  std::vector<PairTask> pairs;
  if (cfg.fixed_s1) {
    for (const Rational& s2 : grid) pairs.push_back({*cfg.fixed_s1, s2});
  } else {
    for (const Rational& s1 : grid)
      for (const Rational& s2 : grid) pairs.push_back({s1, s2});
  }

  std::set<SParams> canon;
  std::size_t first_pending = 0;

  const bool use_checkpoint = cfg.checkpoint_path.has_value();
  std::filesystem::path ckpt, partial;
  if (use_checkpoint) {
    ckpt = *cfg.checkpoint_path;
    partial = ckpt.string() + ".records";
    if (auto line = read_checkpoint(ckpt); line) {
      // Resume: skip every pair up to and including the recorded one, and
      // reload the records persisted for those pairs.
      std::size_t idx = pairs.size();
      for (std::size_t i = 0; i < pairs.size(); ++i)
        if (checkpoint_line(pairs[i]) == *line) {
          idx = i;
          break;
        }
      if (idx == pairs.size())
        throw std::runtime_error("stale checkpoint does not match this search: " + *line);
      first_pending = idx + 1;
      if (std::filesystem::exists(partial)) {
        for (const SolutionRecord& r : import_records(partial).records)
          canon.insert(r.canonical);
      }
    } else {
      // Fresh run: fail on an unwritable location before doing any work.
      std::ofstream probe(ckpt, std::ios::app);
      if (!probe) throw std::runtime_error("cannot write checkpoint: " + ckpt.string());
      probe.close();
      std::filesystem::remove(ckpt);
      std::filesystem::remove(partial);
    }
  }

  unsigned workers = cfg.workers != 0 ? cfg.workers : std::thread::hardware_concurrency();
  if (workers == 0) workers = 1;

  std::ofstream partial_out;
  if (use_checkpoint) {
    partial_out.open(partial, std::ios::app);
    if (!partial_out) throw std::runtime_error("cannot write checkpoint records: " + partial.string());
  }

  std::size_t completed_pairs = 0;
  const std::size_t chunk = std::max<std::size_t>(1, workers * 4);
  for (std::size_t base = first_pending; base < pairs.size(); base += chunk) {
    const std::size_t end = std::min(pairs.size(), base + chunk);
    std::vector<std::vector<SParams>> results(end - base);

    std::atomic<std::size_t> next{base};
    auto work = [&] {
      for (std::size_t i = next.fetch_add(1); i < end; i = next.fetch_add(1))
        results[i - base] = run_pair(pairs[i], grid, cfg.mode, bound);
    };
    if (workers == 1 || end - base == 1) {
      work();
    } else {
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < std::min<std::size_t>(workers, end - base); ++w)
        pool.emplace_back(work);
      for (auto& t : pool) t.join();
    }

    for (std::size_t i = base; i < end; ++i) {
      for (const SParams& c : results[i - base]) {
        if (!canon.insert(c).second) continue;
        if (use_checkpoint) partial_out << to_jsonl(make_record(c, Provenance::Search)) << '\n';
      }
      ++completed_pairs;
      if (cfg.interrupt_after_pairs && completed_pairs >= *cfg.interrupt_after_pairs &&
          i + 1 < pairs.size()) {
        if (use_checkpoint) {
          partial_out.flush();
          write_checkpoint(ckpt, checkpoint_line(pairs[i]));
        }
        throw SearchInterrupted();
      }
    }
    if (use_checkpoint) {
      partial_out.flush();
      write_checkpoint(ckpt, checkpoint_line(pairs[end - 1]));
    }
  }

  if (use_checkpoint) {
    partial_out.close();
    std::filesystem::remove(ckpt);
    std::filesystem::remove(partial);
  }

  std::vector<SolutionRecord> out;
  out.reserve(canon.size());
  for (const SParams& c : canon) out.push_back(make_record(c, Provenance::Search));
  return out;
}

std::string to_jsonl(const SolutionRecord& r) {
  nlohmann::ordered_json j;
  auto svals = nlohmann::ordered_json::array();
  for (const auto& x : r.canonical.v) svals.push_back(x.str());
  j["s"] = std::move(svals);
  if (!r.height.fits_slong_p())
    throw std::domain_error("record height does not fit in a JSON integer");
  j["height"] = r.height.get_si();
  j["residual"] = "0";
  j["feasible"] = r.feasible;
  j["geometric_valid"] = r.geometric_valid;
  j["provenance"] = std::string(provenance_name(r.provenance));
  if (r.as_given != r.canonical) {
    auto raw = nlohmann::ordered_json::array();
    for (const auto& x : r.as_given.v) raw.push_back(x.str());
    j["raw"] = std::move(raw);
  }
  return j.dump();
}

void write_records_jsonl(std::ostream& os, std::span<const SolutionRecord> records) {
  for (const SolutionRecord& r : records) os << to_jsonl(r) << '\n';
}

ImportResult import_records(std::istream& is) {
  ImportResult result;
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
    if (!j.is_object() || !j.contains("s") || !j["s"].is_array() || j["s"].size() != 4)
      throw std::runtime_error("line " + std::to_string(line_number) +
                               ": expected an object with a 4-element \"s\" array");
    SParams raw;
    try {
      const auto& source = j.contains("raw") ? j["raw"] : j["s"];
      for (int i = 0; i < 4; ++i) raw.v[i] = Rational::parse(source.at(i).get<std::string>());
    } catch (const std::exception& e) {
      throw std::runtime_error("line " + std::to_string(line_number) + ": " + e.what());
    }

    Provenance prov = Provenance::Import;
    if (j.contains("provenance") && j["provenance"].is_string()) {
      try {
        prov = provenance_from_name(j["provenance"].get<std::string>());
      } catch (const std::invalid_argument&) {
        result.rejected.push_back({line_number, "unknown provenance"});
        continue;
      }
    }

    bool zero = false;
    for (const auto& x : raw.v) zero = zero || x.is_zero();
    if (zero) {
      result.rejected.push_back({line_number, "zero parameter"});
      continue;
    }
    if (!residual_polynomial(raw).is_zero()) {
      result.rejected.push_back(
          {line_number, "governing residual nonzero: " + residual_polynomial(raw).str()});
      continue;
    }
    if (!nondegenerate(raw)) {
      result.rejected.push_back({line_number, "degenerate parameters"});
      continue;
    }
    result.records.push_back(make_record(raw, prov));
  }
  return result;
}

ImportResult import_records(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return import_records(in);
}

}  // namespace monoclin
