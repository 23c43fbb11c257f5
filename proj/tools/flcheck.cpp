#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "flc/flcheck.hpp"
#include "json.hpp"

using namespace flc;

namespace {

struct Output {
  std::string format = "json";
  std::string path;
  std::ofstream file;

  std::ostream& stream() { return path.empty() ? std::cout : file; }
};

int emit_reports(Output& out, const std::vector<CaseReport>& reports, int parse_failures) {
  std::ostream& os = out.stream();
  if (out.format == "csv") os << csv_header() << "\n";
  int failed = parse_failures;
  for (auto& r : reports) {
    if (out.format == "csv")
      os << report_csv(r) << "\n";
    else
      os << report_json(r) << "\n";
    if (!r.pass) ++failed;
  }
  int total = int(reports.size()) + parse_failures;
  if (failed == 0) {
    std::cerr << "flcheck: all " << total << " cases passed\n";
    return 0;
  }
  std::cerr << "flcheck: " << failed << " of " << total << " cases failed\n";
  return 1;
}

std::vector<CaseReport> run_files(const std::vector<std::string>& files, const std::string& check,
                                  const RunOptions& opt, int& parse_failures) {
  std::vector<CaseReport> out;
  for (auto& path : files) {
    std::ifstream in(path);
    if (!in) {
      std::cerr << path << ": cannot open\n";
      ++parse_failures;
      continue;
    }
    std::stringstream ss;
    ss << in.rdbuf();
    std::vector<CaseFile> cases;
    try {
      cases = parse_cases(ss.str());
    } catch (const Error& e) {
      std::cerr << path << ": " << e.what() << "\n";
      ++parse_failures;
      continue;
    }
    for (auto& c : cases) {
      if (check == "invariants" || check == "orbital") {
        c.check = check;
      } else if (c.check != check) {
        CaseReport r;
        r.case_id = c.case_id;
        r.check = c.check;
        r.q = unsigned(c.q());
        r.kind = c.kind;
        r.n = c.n;
        r.error = "case is a '" + c.check + "' case, expected '" + check + "'";
        out.push_back(r);
        continue;
      }
      out.push_back(run_case(c, opt));
    }
  }
  std::sort(out.begin(), out.end(), [](const CaseReport& a, const CaseReport& b) { return a.case_id < b.case_id; });
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact local checks for affine Springer fibres and orbital integrals"};
  app.require_subcommand(1);
  app.fallthrough();

  Output out;
  std::optional<int> precision;
  uint64_t seed = 1;
  app.add_option("--precision", precision, "Starting truncation level")->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "Corpus seed");
  app.add_option("--out", out.path, "Write reports to this file instead of stdout");
  app.add_option("--format", out.format, "Report format")->check(CLI::IsMember({"json", "csv"}));

  std::vector<std::string> files;
  const std::vector<std::pair<std::string, std::string>> file_commands{
      {"invariants", "Local invariants and the three delta routes"},
      {"orbital", "kappa-orbital integral under both normalizations"},
      {"verify-ls", "Check the endoscopic identity on ls cases"},
      {"verify-nonstandard", "Check the non-standard identity on nonstandard cases"}};
  std::map<std::string, CLI::App*> subs;
  for (auto& [name, help] : file_commands) {
    subs[name] = app.add_subcommand(name, help);
    subs[name]->add_option("files", files, "Case files (JSON object or array)")->required()->check(CLI::ExistingFile);
  }

  CorpusRanges ranges;
  int count = 50;
  std::vector<std::string> kinds;
  auto* corpus = app.add_subcommand("corpus", "Generate and run a random corpus");
  corpus->add_option("--count", count, "Number of cases")->check(CLI::PositiveNumber);
  corpus->add_option("--q", ranges.q, "Residue field sizes (primes)")->delimiter(',');
  corpus->add_option("--n-min", ranges.n_min, "Smallest rank n");
  corpus->add_option("--n-max", ranges.n_max, "Largest rank n");
  corpus->add_option("--d-max", ranges.d_max, "Largest discriminant valuation");
  corpus->add_option("--depth", ranges.depth, "Highest exponent in random coefficients");
  corpus->add_option("--kinds", kinds, "Group kinds (GL,SL,PGL)")->delimiter(',');
  corpus->add_option("--check", ranges.check, "Case type")->check(CLI::IsMember({"ls", "invariants"}));

  std::string fkind = "SL";
  int fn = 2;
  long long genus = 0, degD = 2;
  auto* formulas = app.add_subcommand("formulas", "Global dimension formulas");
  formulas->add_option("--kind", fkind, "Group kind")->check(CLI::IsMember({"GL", "SL", "PGL"}));
  formulas->add_option("--n", fn, "Rank n")->check(CLI::PositiveNumber);
  formulas->add_option("--genus", genus, "Genus of the curve");
  formulas->add_option("--degD", degD, "Degree of the divisor D");

  CLI11_PARSE(app, argc, argv);

  if (!out.path.empty()) {
    out.file.open(out.path);
    if (!out.file) {
      std::cerr << "flcheck: cannot write " << out.path << "\n";
      return 2;
    }
  }
  RunOptions opt = default_run_options();
  opt.precision = precision;

  try {
    for (auto& [name, sub] : subs) {
      if (!sub->parsed()) continue;
      std::string check = name == "verify-ls" ? "ls" : name == "verify-nonstandard" ? "nonstandard" : name;
      int parse_failures = 0;
      auto reports = run_files(files, check, opt, parse_failures);
      return emit_reports(out, reports, parse_failures);
    }
    if (corpus->parsed()) {
      if (!kinds.empty()) {
        ranges.kinds.clear();
        for (auto& k : kinds) ranges.kinds.push_back(parse_kind(k));
      }
      return emit_reports(out, run_corpus(seed, count, ranges, opt), 0);
    }
    if (formulas->parsed()) {
      // the formulas do not depend on the characteristic
      unsigned p = unsigned(fn) + 1;
      while (!is_prime(p) || p < 3) ++p;
      GlobalFormulas f = global_formulas(build_root_datum(parse_kind(fkind), fn, p), genus, degD);
      nlohmann::json j{{"kind", fkind}, {"n", fn}, {"genus", genus}, {"degD", degD},
                       {"dimA", f.dimA}, {"dimPa", f.dimPa}, {"delta_sum_bound", f.delta_sum_bound}};
      out.stream() << j.dump() << "\n";
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "flcheck: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
