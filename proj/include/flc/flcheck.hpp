#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "flc/error.hpp"
#include "flc/orbital.hpp"

namespace flc {

// Parse failure with a 1-based position. line is 0 when the input is a
// single series literal.
class SyntaxError : public Error {
 public:
  SyntaxError(int line, int column, const std::string& msg);
  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& detail() const { return detail_; }

 private:
  int line_, column_;
  std::string detail_;
};

// Series literal: integer terms c*e^k joined by + or -, e.g. "1 + 2*e^3".
// Coefficients are reduced into the prime field. The precision is at least
// min_prec and always exceeds the highest exponent.
TruncSeries parse_series(const FieldPtr& F, const std::string& s, int min_prec = 1);
// Canonical literal: increasing exponents, coefficients in 1..p-1 (prime field
// elements only), "0" for zero.
std::string emit_series(const TruncSeries& s);

struct CaseFile {
  std::string case_id;
  unsigned p = 3, m = 1;
  Kind kind = Kind::GL;
  int n = 2;
  std::string check = "ls";  // "invariants", "orbital", "ls" or "nonstandard"
  std::vector<std::string> a;  // characteristic on G (all checks except ls with a torus or levi H)
  std::string h_kind;          // ls: "G", "torus_unramified", "torus_split" or "levi"
  std::string x;               // torus coordinate
  std::vector<std::vector<std::string>> blocks;  // levi block characteristics
  std::vector<Rat> kappa;      // on the basis of X_*
  std::optional<Kind> partner;  // nonstandard: the second group
  std::optional<int> precision;

  uint64_t q() const;
};

// Reads a case object; throws SyntaxError on malformed JSON or literals and
// Error(ParseError) on a structurally invalid case.
CaseFile parse_case(const std::string& json_text);
std::vector<CaseFile> parse_cases(const std::string& json_text);  // object or array
// Canonical JSON (sorted keys, canonical literals).
std::string emit_case(const CaseFile& c);

// Characteristic on G described by a case (the transfer of a_H for ls cases)
// and its kappa (trivial when absent).
LocalChar case_characteristic(const CaseFile& c);
Kappa case_kappa(const CaseFile& c);

struct RunOptions {
  std::optional<int> precision;  // overrides the case precision
  int precision_cap = 256;
};
// Reads FLCHECK_PRECISION_CAP when set.
RunOptions default_run_options();

// Runs one case; errors are recorded in the report (pass = false).
CaseReport run_case(const CaseFile& c, const RunOptions& opt = default_run_options());

struct CorpusRanges {
  std::vector<unsigned> q{3, 5, 7};
  int n_min = 2, n_max = 3;
  int d_max = 6;
  int depth = 4;  // highest exponent drawn in a coefficient
  std::vector<Kind> kinds{Kind::GL, Kind::SL, Kind::PGL};
  std::string check = "ls";  // "ls" draws endoscopic data, "invariants" plain characteristics
};

// Deterministic in (seed, count, ranges); distinct cases, all regular and tame.
std::vector<CaseFile> generate_corpus(uint64_t seed, int count, const CorpusRanges& ranges);
std::vector<CaseReport> run_corpus(uint64_t seed, int count, const CorpusRanges& ranges,
                                   const RunOptions& opt = default_run_options());

struct GlobalFormulas {
  long long dimA = 0;
  long long dimPa = 0;
  long long delta_sum_bound = 0;
};
// Dimensions of the Hitchin base and of the Picard fibre for a curve of genus
// g and a divisor of degree degD > 2g - 2.
GlobalFormulas global_formulas(const RootDatum& rd, long long g, long long degD);

// One JSON object per report, keys sorted; the timing field is omitted when
// with_timing is false.
std::string report_json(const CaseReport& r, bool with_timing = true);
std::string csv_header();
std::string report_csv(const CaseReport& r);

}  // namespace flc
