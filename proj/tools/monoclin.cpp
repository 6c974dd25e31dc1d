// Command-line surface for the s-parameter toolkit: verification,
// reconstruction, family generation, bounded search, coverage
// classification, plot data and builtin datasets.

#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "monoclin/asymptotics.hpp"
#include "monoclin/coverage.hpp"
#include "monoclin/families.hpp"
#include "monoclin/fixtures.hpp"
#include "monoclin/geometry.hpp"
#include "monoclin/search.hpp"

namespace {

using namespace monoclin;

constexpr int kExitOk = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;

const char* bool_str(bool b) { return b ? "true" : "false"; }

std::vector<Rational> parse_param_list(const std::string& csv) {
  std::vector<Rational> out;
  std::size_t pos = 0;
  while (true) {
    const auto comma = csv.find(',', pos);
    std::string part = csv.substr(pos, comma == std::string::npos ? std::string::npos
                                                                  : comma - pos);
    while (!part.empty() && std::isspace(static_cast<unsigned char>(part.front())))
      part.erase(part.begin());
    while (!part.empty() && std::isspace(static_cast<unsigned char>(part.back())))
      part.pop_back();
    out.push_back(Rational::parse(part));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

Integer to_integer(const Rational& r, const char* what) {
  if (!r.is_integer())
    throw std::invalid_argument(std::string(what) + " must be an integer, got " + r.str());
  return r.num();
}

struct RangeSpec {
  std::string name;
  long lo = 0;
  long hi = 0;
};

std::vector<RangeSpec> parse_ranges(const std::string& text) {
  std::vector<RangeSpec> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const std::string part =
        text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    const auto eq = part.find('=');
    const auto dots = part.find("..");
    if (eq == std::string::npos || dots == std::string::npos || dots < eq)
      throw std::invalid_argument("range must look like name=lo..hi, got \"" + part + "\"");
    RangeSpec spec;
    spec.name = part.substr(0, eq);
    spec.lo = std::stol(part.substr(eq + 1, dots - eq - 1));
    spec.hi = std::stol(part.substr(dots + 2));
    if (spec.hi < spec.lo) throw std::invalid_argument("empty range for " + spec.name);
    out.push_back(std::move(spec));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  return out;
}

int run_verify(const std::string& s_text) {
  const SParams s = SParams::parse(s_text);
  const Rational residual = governing_residual(s);  // throws on zero entries
  const bool solution = is_solution(s);
  const SParams canon = normalize(s);
  std::cout << "residual " << residual.str() << '\n';
  std::cout << "solution " << bool_str(solution) << '\n';
  std::cout << "feasible " << bool_str(sharipov_feasible(canon)) << '\n';
  const bool geom = solution && validate_geometric(reconstruct(canon));
  std::cout << "geometric_valid " << bool_str(geom) << '\n';
  std::cout << "canonical " << canon.str() << '\n';
  return solution ? kExitOk : kExitFalse;
}

int run_reconstruct(const std::string& s_text, bool integer_form) {
  const SParams s = SParams::parse(s_text);
  const RationalPiped piped = reconstruct(s);
  Rational cosine;
  bool geom = false;
  if (integer_form) {
    const IntegerPiped ip = integerize(piped);
    std::cout << ip.str() << '\n';
    cosine = cos_angle(ip);
    geom = validate_geometric(ip);
  } else {
    std::cout << piped.x.str();
    for (const Rational* v : {&piped.y, &piped.z, &piped.a, &piped.b, &piped.c1,
                              &piped.c2, &piped.d1, &piped.d2})
      std::cout << ' ' << v->str();
    std::cout << '\n';
    cosine = cos_angle(piped);
    geom = validate_geometric(piped);
  }
  std::cout << "cos_angle " << cosine.str() << '\n';
  std::cout << "geometric_valid " << bool_str(geom) << '\n';
  if (geom) {
    const RationalityFlags flags = rational_area_volume_lattice(piped);
    std::cout << "area_rational " << bool_str(flags.area_rational) << '\n';
    std::cout << "volume_rational " << bool_str(flags.volume_rational) << '\n';
    std::cout << "lattice_embeddable " << bool_str(flags.lattice_embeddable) << '\n';
  }
  return kExitOk;
}

void emit_family_point(std::ostream& os, Family family, std::vector<Rational> params,
                       const SParams& s) {
  os << to_jsonl(make_family_point(family, std::move(params), s)) << '\n';
}

void generate_for_params(std::ostream& os, const std::string& name,
                         const std::vector<Rational>& params) {
  if (name == "pattern1") {
    if (params.size() != 2) throw std::invalid_argument("pattern1 expects params m,n");
    const Integer m = to_integer(params[0], "m");
    const Integer n = to_integer(params[1], "n");
    const auto sets = pattern1_four_sets(m, n);
    const Family tags[] = {Family::P1Set1, Family::P1Set2, Family::P1Set3, Family::P1Set4};
    for (int i = 0; i < 4; ++i) emit_family_point(os, tags[i], params, sets[i]);
  } else if (name == "pattern1-rat") {
    if (params.size() != 1) throw std::invalid_argument("pattern1-rat expects one param q");
    emit_family_point(os, Family::P1Rat, params, pattern1_rat(params[0]));
  } else if (name == "pattern2") {
    if (params.size() != 2) throw std::invalid_argument("pattern2 expects params m,n");
    emit_family_point(os, Family::P2Int, params,
                      pattern2_int(to_integer(params[0], "m"), to_integer(params[1], "n")));
  } else if (name == "pattern2-rat") {
    if (params.size() != 1) throw std::invalid_argument("pattern2-rat expects one param q");
    emit_family_point(os, Family::P2Rat, params, pattern2_rat(params[0]));
  } else if (name == "general") {
    if (params.size() == 2) {
      emit_family_point(os, Family::GenRat, params, general_rat(params[0], params[1]));
    } else if (params.size() == 4) {
      emit_family_point(os, Family::GenInt, params,
                        general_int(to_integer(params[0], "r"), to_integer(params[1], "s"),
                                    to_integer(params[2], "m"), to_integer(params[3], "n")));
    } else {
      throw std::invalid_argument("general expects params s,r (rational) or r,s,m,n (integer)");
    }
  } else if (name == "obtuse") {
    if (params.size() != 1) throw std::invalid_argument("obtuse expects one param n");
    emit_family_point(os, Family::Obtuse, params, obtuse(to_integer(params[0], "n")));
  } else if (name == "acute") {
    if (params.size() != 2) throw std::invalid_argument("acute expects params d,n");
    emit_family_point(os, Family::Acute, params,
                      acute(to_integer(params[0], "d"), to_integer(params[1], "n")));
  } else {
    throw std::invalid_argument("unknown family name: " + name);
  }
}

int run_family(const std::string& name, const std::vector<std::string>& params_args,
               const std::string& range_arg, const std::string& out_path) {
  std::ofstream file;
  std::ostream* os = &std::cout;
  if (!out_path.empty()) {
    file = open_output(out_path);
    os = &file;
  }
  if (!range_arg.empty()) {
    const auto ranges = parse_ranges(range_arg);
    if (ranges.size() == 1) {
      for (long v = ranges[0].lo; v <= ranges[0].hi; ++v) {
        try {
          generate_for_params(*os, name, {Rational(v)});
        } catch (const std::domain_error&) {
          // parameter outside the family's domain; nothing to emit
        }
      }
    } else if (ranges.size() == 2) {
      for (long v0 = ranges[0].lo; v0 <= ranges[0].hi; ++v0)
        for (long v1 = ranges[1].lo; v1 <= ranges[1].hi; ++v1) {
          try {
            generate_for_params(*os, name, {Rational(v0), Rational(v1)});
          } catch (const std::domain_error&) {
          }
        }
    } else {
      throw std::invalid_argument("--range supports one or two variables");
    }
    return kExitOk;
  }
  if (params_args.empty())
    throw std::invalid_argument("family requires --params or --range");
  for (const std::string& p : params_args) generate_for_params(*os, name, parse_param_list(p));
  return kExitOk;
}

int run_search(long height, const std::string& fix_s1, bool oracle,
               const std::string& checkpoint, unsigned threads, const std::string& out_path) {
  SearchConfig cfg;
  cfg.height_bound = height;
  if (!fix_s1.empty()) cfg.fixed_s1 = Rational::parse(fix_s1);
  cfg.mode = oracle ? SearchMode::Oracle : SearchMode::Reduced;
  if (!checkpoint.empty()) cfg.checkpoint_path = checkpoint;
  cfg.workers = threads;
  const auto records = enumerate_solutions(cfg);
  auto out = open_output(out_path);
  write_records_jsonl(out, records);
  std::cout << "wrote " << records.size() << " records to " << out_path << '\n';
  return kExitOk;
}

int run_cover(const std::string& in_path, const std::string& out_path) {
  const ImportResult imported = import_records(std::filesystem::path(in_path));
  for (const ImportIssue& issue : imported.rejected)
    std::cerr << "rejected line " << issue.line_number << ": " << issue.reason << '\n';
  const CoverageReport report = classify(imported.records);
  auto out = open_output(out_path);
  out << report_json(report) << '\n';
  std::cout << "total=" << report.total << " covered=" << report.covered
            << " anomalous=" << report.anomalous << '\n';
  return kExitOk;
}

int run_plot_data(const std::string& in_path, const std::string& out_path) {
  std::ifstream in(in_path);
  if (!in) throw std::runtime_error("cannot open " + in_path);
  const auto rows = plot_rows_from_stream(in);
  auto out = open_output(out_path);
  out << emit_plot_points(rows);
  std::cout << "wrote " << rows.size() << " rows to " << out_path << '\n';
  return kExitOk;
}

int run_fixtures(const std::string& which, const std::string& out_path) {
  std::ofstream file;
  std::ostream* os = &std::cout;
  if (!out_path.empty()) {
    file = open_output(out_path);
    os = &file;
  }
  if (which == "table1") {
    for (const auto& row : fixtures::table1())
      *os << to_jsonl(make_record(row.s, Provenance::Import)) << '\n';
  } else if (which == "table2") {
    for (const auto& s : fixtures::table2())
      *os << to_jsonl(make_record(s, Provenance::Import)) << '\n';
  } else if (which == "acute18") {
    for (const auto& row : fixtures::acute18()) {
      nlohmann::ordered_json j;
      j["d"] = row.d;
      j["coefficient"] = row.coefficient.str();
      *os << j.dump() << '\n';
    }
  } else {
    throw std::invalid_argument("unknown fixture set: " + which +
                                " (expected table1, table2 or acute18)");
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic toolkit for bi-orthogonal monoclinic Diophantine pipeds"};
  app.require_subcommand(1);

  std::string s_text;
  auto* verify = app.add_subcommand("verify", "check a quadruple against the governing equation");
  verify->add_option("--s", s_text, "quadruple s1,s2,s3,s4")->required();

  std::string rec_s;
  bool rec_integer = false;
  auto* rec = app.add_subcommand("reconstruct", "build the piped lengths from a solution");
  rec->add_option("--s", rec_s, "quadruple s1,s2,s3,s4")->required();
  rec->add_flag("--integer", rec_integer, "emit the primitive integer piped");

  std::string fam_name, fam_range, fam_out;
  std::vector<std::string> fam_params;
  auto* fam = app.add_subcommand("family", "emit closed-form solutions as JSONL");
  fam->add_option("--name", fam_name,
                  "pattern1|pattern1-rat|pattern2|pattern2-rat|general|obtuse|acute")
      ->required();
  fam->add_option("--params", fam_params, "comma-separated parameters (repeatable)");
  fam->add_option("--range", fam_range, "integer grid, e.g. d=2..19,n=2..30");
  fam->add_option("--out", fam_out, "output path (default stdout)");

  long search_height = 0;
  std::string search_fix, search_ckpt, search_out;
  bool search_oracle = false;
  unsigned search_threads = 0;
  auto* search = app.add_subcommand("search", "enumerate solutions up to a height bound");
  search->add_option("--height", search_height, "height bound H >= 2")->required();
  search->add_option("--fix-s1", search_fix, "fix the first parameter, e.g. 1/2");
  search->add_flag("--oracle", search_oracle, "brute-force all four slots");
  search->add_option("--checkpoint", search_ckpt, "checkpoint file for resumable runs");
  search->add_option("--threads", search_threads, "worker threads (default: hardware)");
  search->add_option("--out", search_out, "output JSONL path")->required();

  std::string cover_in, cover_out;
  auto* cover = app.add_subcommand("cover", "classify records against the parameterizations");
  cover->add_option("--in", cover_in, "input JSONL records")->required();
  cover->add_option("--out", cover_out, "output report JSON")->required();

  std::string plot_in, plot_out;
  auto* plot = app.add_subcommand("plot-data", "emit x = s3-s4, y = numerator(s2) points");
  plot->add_option("--in", plot_in, "input JSONL (records or family points)")->required();
  plot->add_option("--out", plot_out, "output CSV path")->required();

  std::string fix_emit, fix_out;
  auto* fix = app.add_subcommand("fixtures", "emit builtin datasets");
  fix->add_option("--emit", fix_emit, "table1|table2|acute18")->required();
  fix->add_option("--out", fix_out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (verify->parsed()) return run_verify(s_text);
    if (rec->parsed()) return run_reconstruct(rec_s, rec_integer);
    if (fam->parsed()) return run_family(fam_name, fam_params, fam_range, fam_out);
    if (search->parsed())
      return run_search(search_height, search_fix, search_oracle, search_ckpt,
                        search_threads, search_out);
    if (cover->parsed()) return run_cover(cover_in, cover_out);
    if (plot->parsed()) return run_plot_data(plot_in, plot_out);
    if (fix->parsed()) return run_fixtures(fix_emit, fix_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
