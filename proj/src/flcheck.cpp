#include "flc/flcheck.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdlib>
#include <random>
#include <set>
#include <sstream>

#include "json.hpp"

namespace flc {

using nlohmann::json;

SyntaxError::SyntaxError(int line, int column, const std::string& msg)
    : Error(Err::ParseError,
            (line > 0 ? "line " + std::to_string(line) + ", " : std::string()) + "column " + std::to_string(column) +
                ": " + msg),
      line_(line),
      column_(column),
      detail_(msg) {}

namespace {

constexpr int kMaxExponent = 4096;

struct Term {
  int k;
  long long c;
};

std::vector<Term> lex_series(const std::string& s) {
  size_t i = 0;
  auto at = [&](size_t pos, const std::string& msg) { return SyntaxError(0, int(pos) + 1, msg); };
  auto skip = [&] {
    while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
  };
  auto digits = [&](size_t start, long long limit, const char* what) {
    long long v = 0;
    while (i < s.size() && std::isdigit((unsigned char)s[i])) {
      v = 10 * v + (s[i++] - '0');
      if (v > limit) throw at(start, std::string(what) + " is too large");
    }
    return v;
  };
  std::vector<Term> out;
  skip();
  if (i == s.size()) throw at(i, "empty series literal");
  for (bool first = true;; first = false) {
    skip();
    long long sign = 1;
    if (!first) {
      if (i == s.size()) break;
      if (s[i] != '+' && s[i] != '-') throw at(i, "expected '+' or '-'");
      sign = s[i++] == '-' ? -1 : 1;
      skip();
    } else if (s[i] == '-') {
      sign = -1;
      ++i;
      skip();
    }
    long long c = 1;
    bool coef = i < s.size() && std::isdigit((unsigned char)s[i]);
    if (coef) {
      c = digits(i, 1000000000000LL, "coefficient");
      skip();
      if (i == s.size() || s[i] != '*') {
        out.push_back({0, sign * c});
        continue;
      }
      size_t star = i++;
      skip();
      if (i == s.size() || s[i] != 'e') throw at(star, "expected 'e' after '*'");
    } else if (i == s.size() || s[i] != 'e') {
      throw at(i, "expected a coefficient or 'e'");
    }
    ++i;
    int k = 1;
    skip();
    if (i < s.size() && s[i] == '^') {
      size_t caret = i++;
      skip();
      if (i == s.size() || !std::isdigit((unsigned char)s[i])) throw at(caret, "expected an exponent after '^'");
      k = int(digits(caret, kMaxExponent, "exponent"));
    }
    out.push_back({k, sign * c});
  }
  return out;
}

Error parse_error(const std::string& msg) { return Error(Err::ParseError, msg); }

TruncSeries pad(const TruncSeries& s, int N) {
  TruncSeries t(s.field(), std::max(N, s.prec()));
  for (int i = 0; i < s.prec(); ++i) t.at(i) = s[i];
  return t;
}

std::string kappa_str(const Rat& r) { return rat_str(r); }

}  // namespace

TruncSeries parse_series(const FieldPtr& F, const std::string& s, int min_prec) {
  auto terms = lex_series(s);
  int top = 0;
  for (auto& t : terms) top = std::max(top, t.k);
  TruncSeries out(F, std::max(min_prec, top + 1));
  for (auto& t : terms) out.at(t.k) = F->add(out[t.k], F->from_int(t.c));
  return out;
}

std::string emit_series(const TruncSeries& s) {
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k < s.prec(); ++k) {
    Elt c = s[k];
    if (c == 0) continue;
    if (c >= s.F().p()) fail(Err::Unsupported, "series literal needs a coefficient outside the prime field");
    if (!first) os << " + ";
    first = false;
    os << c;
    if (k == 1) os << "*e";
    if (k > 1) os << "*e^" << k;
  }
  return first ? "0" : os.str();
}

uint64_t CaseFile::q() const {
  uint64_t r = 1;
  for (unsigned i = 0; i < m; ++i) r *= p;
  return r;
}

namespace {

const std::set<std::string> kChecks{"invariants", "orbital", "ls", "nonstandard"};
const std::set<std::string> kHKinds{"G", "torus_unramified", "torus_split", "levi"};

template <class T>
T get_as(const json& j, const std::string& key, const char* type) {
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw parse_error("field '" + key + "' must be " + type);
  }
}

std::string canonical_literal(const FieldPtr& F, const std::string& s, const std::string& where) {
  try {
    return emit_series(parse_series(F, s));
  } catch (const SyntaxError& e) {
    throw SyntaxError(0, e.column(), where + ": " + e.detail());
  }
}

std::vector<std::string> literal_list(const FieldPtr& F, const json& j, const std::string& where) {
  if (!j.is_array()) throw parse_error(where + " must be an array of series literals");
  std::vector<std::string> out;
  for (size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string()) throw parse_error(where + " must be an array of series literals");
    out.push_back(canonical_literal(F, j[i].get<std::string>(), where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

Kind kind_from(const std::string& s, const std::string& where) {
  if (s != "GL" && s != "SL" && s != "PGL") throw parse_error(where + " must be GL, SL or PGL");
  return parse_kind(s);
}

CaseFile case_from_json(const json& j) {
  if (!j.is_object()) throw parse_error("a case must be a JSON object");
  static const std::set<std::string> allowed{"case_id", "p", "m", "q", "kind", "n", "check",
                                             "a", "H", "kappa", "partner", "precision"};
  for (auto& [k, v] : j.items())
    if (!allowed.count(k)) throw parse_error("unknown field '" + k + "'");
  for (const char* k : {"case_id", "p", "kind", "n", "check"})
    if (!j.contains(k)) throw parse_error(std::string("missing field '") + k + "'");
  CaseFile c;
  c.case_id = get_as<std::string>(j, "case_id", "a string");
  c.p = get_as<unsigned>(j, "p", "a prime");
  if (j.contains("m")) c.m = get_as<unsigned>(j, "m", "a positive integer");
  if (c.p < 3 || !is_prime(c.p)) throw parse_error("p must be an odd prime");
  if (c.m < 1 || c.m > 6) throw parse_error("m must lie in 1..6");
  if (j.contains("q") && get_as<uint64_t>(j, "q", "an integer") != c.q()) throw parse_error("q differs from p^m");
  c.kind = kind_from(get_as<std::string>(j, "kind", "a string"), "kind");
  c.n = get_as<int>(j, "n", "an integer");
  if (c.n < 1 || c.n > 6) throw parse_error("n must lie in 1..6");
  c.check = get_as<std::string>(j, "check", "a string");
  if (!kChecks.count(c.check)) throw parse_error("check must be invariants, orbital, ls or nonstandard");
  auto F = FqField::get(c.p, c.m);
  if (j.contains("a")) {
    c.a = literal_list(F, j.at("a"), "a");
    if (int(c.a.size()) != c.n) throw parse_error("a must have n entries");
  }
  if (j.contains("H")) {
    const json& h = j.at("H");
    if (!h.is_object()) throw parse_error("H must be an object");
    for (auto& [k, v] : h.items())
      if (k != "kind" && k != "x" && k != "blocks") throw parse_error("unknown field 'H." + k + "'");
    if (!h.contains("kind")) throw parse_error("missing field 'H.kind'");
    c.h_kind = get_as<std::string>(h, "kind", "a string");
    if (!kHKinds.count(c.h_kind)) throw parse_error("H.kind must be G, torus_unramified, torus_split or levi");
    if (h.contains("x")) {
      if (!h.at("x").is_string()) throw parse_error("H.x must be a series literal");
      c.x = canonical_literal(F, h.at("x").get<std::string>(), "H.x");
    }
    if (h.contains("blocks")) {
      if (!h.at("blocks").is_array()) throw parse_error("H.blocks must be an array");
      int total = 0;
      for (size_t b = 0; b < h.at("blocks").size(); ++b) {
        c.blocks.push_back(literal_list(F, h.at("blocks")[b], "H.blocks[" + std::to_string(b) + "]"));
        total += int(c.blocks.back().size());
      }
      if (total != c.n) throw parse_error("H.blocks sizes must add up to n");
    }
    if (c.h_kind.rfind("torus", 0) == 0 && c.x.empty()) throw parse_error("a torus H needs H.x");
    if (c.h_kind == "levi" && c.blocks.empty()) throw parse_error("a levi H needs H.blocks");
  }
  if (j.contains("kappa")) {
    const json& k = j.at("kappa");
    if (!k.is_object() || !k.contains("order") || !k.contains("values") || !k.at("values").is_array() ||
        k.size() != 2)
      throw parse_error("kappa must be {\"order\": int, \"values\": [rational strings]}");
    std::vector<Rat> vals;
    for (auto& v : k.at("values")) {
      if (!v.is_string()) throw parse_error("kappa values must be rational strings");
      try {
        vals.push_back(parse_rat(v.get<std::string>()));
      } catch (const std::invalid_argument& e) {
        throw parse_error(std::string("kappa: ") + e.what());
      }
    }
    Kappa kap = make_kappa(vals);
    if (kap.order != get_as<int>(k, "order", "an integer")) throw parse_error("kappa order does not match its values");
    c.kappa = kap.values;
  }
  if (j.contains("partner")) c.partner = kind_from(get_as<std::string>(j, "partner", "a string"), "partner");
  if (j.contains("precision")) {
    c.precision = get_as<int>(j, "precision", "an integer");
    if (*c.precision < 1) throw parse_error("precision must be positive");
  }
  if (c.check == "ls" && c.h_kind.empty()) throw parse_error("an ls case needs H");
  if (c.check != "ls" && !c.h_kind.empty()) throw parse_error("H is only meaningful for ls cases");
  if (c.check == "nonstandard" && !c.partner) throw parse_error("a nonstandard case needs partner");
  if ((c.check != "ls" || c.h_kind == "G") && c.a.empty()) throw parse_error("missing field 'a'");
  return c;
}

json case_to_json(const CaseFile& c) {
  json j;
  j["case_id"] = c.case_id;
  j["p"] = c.p;
  j["m"] = c.m;
  j["q"] = c.q();
  j["kind"] = kind_name(c.kind);
  j["n"] = c.n;
  j["check"] = c.check;
  if (!c.a.empty()) j["a"] = c.a;
  if (!c.h_kind.empty()) {
    json h;
    h["kind"] = c.h_kind;
    if (!c.x.empty()) h["x"] = c.x;
    if (!c.blocks.empty()) h["blocks"] = c.blocks;
    j["H"] = h;
  }
  if (!c.kappa.empty()) {
    json vals = json::array();
    for (auto& v : c.kappa) vals.push_back(kappa_str(v));
    j["kappa"] = {{"order", make_kappa(c.kappa).order}, {"values", vals}};
  }
  if (c.partner) j["partner"] = kind_name(*c.partner);
  if (c.precision) j["precision"] = *c.precision;
  return j;
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // e.byte is the 1-based offset of the last character read
    size_t off = e.byte > 0 ? e.byte - 1 : 0;
    int line = 1, col = 1;
    for (size_t i = 0; i < off && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string msg = e.what();
    auto pos = msg.find(": ", msg.find("parse error"));
    throw SyntaxError(line, col, pos == std::string::npos ? msg : msg.substr(pos + 2));
  }
}

}  // namespace

CaseFile parse_case(const std::string& json_text) { return case_from_json(parse_json(json_text)); }

std::vector<CaseFile> parse_cases(const std::string& json_text) {
  json j = parse_json(json_text);
  std::vector<CaseFile> out;
  if (j.is_array()) {
    for (size_t i = 0; i < j.size(); ++i) {
      try {
        out.push_back(case_from_json(j[i]));
      } catch (const SyntaxError&) {
        throw;
      } catch (const Error& e) {
        throw Error(Err::ParseError, "case " + std::to_string(i) + ": " + e.what());
      }
    }
  } else {
    out.push_back(case_from_json(j));
  }
  return out;
}

std::string emit_case(const CaseFile& c) { return case_to_json(c).dump(); }

RunOptions default_run_options() {
  RunOptions o;
  if (const char* s = std::getenv("FLCHECK_PRECISION_CAP")) {
    try {
      int v = std::stoi(s);
      if (v > 0) o.precision_cap = v;
    } catch (const std::logic_error&) {
    }
  }
  return o;
}

namespace {

struct CaseContext {
  FieldPtr F;
  RootDatum rd;
  int prec = 64;

  std::vector<TruncSeries> series(const std::vector<std::string>& lits) const {
    std::vector<TruncSeries> out;
    int N = prec;
    for (auto& s : lits) {
      out.push_back(parse_series(F, s, prec));
      N = std::max(N, out.back().prec());
    }
    for (auto& s : out) s = pad(s, N);
    return out;
  }
  LocalChar character(const RootDatum& r, const std::vector<std::string>& lits) const {
    LocalChar a = make_local_char(r, F, series(lits));
    try {
      disc_valuation(a.P());
    } catch (const Error& e) {
      if (e.code() == Err::PrecisionExhausted) fail(Err::NotRegular, "discriminant of the characteristic vanishes");
      throw;
    }
    return a;
  }
};

Kappa case_kappa(const CaseFile& c, const RootDatum& rd) {
  if (c.kappa.empty()) return make_kappa(std::vector<Rat>(rd.rank, Rat(0)));
  return make_kappa(c.kappa);
}

EndoChar endo_char(const CaseContext& ctx, const CaseFile& c) {
  EndoChar h;
  h.kind = c.h_kind;
  if (c.h_kind == "G") {
    h.blocks = {ctx.character(ctx.rd, c.a)};
  } else if (c.h_kind == "levi") {
    std::vector<std::string> all;
    for (auto& b : c.blocks) all.insert(all.end(), b.begin(), b.end());
    auto ser = ctx.series(all);
    size_t at = 0;
    for (auto& b : c.blocks) {
      std::vector<TruncSeries> part(ser.begin() + at, ser.begin() + at + b.size());
      at += b.size();
      h.blocks.push_back(make_local_char(build_root_datum(Kind::GL, int(b.size()), c.p), ctx.F, part));
    }
  } else {
    h.x = parse_series(ctx.F, c.x, ctx.prec);
  }
  return h;
}

CaseContext make_context(const CaseFile& c, int start) {
  CaseContext ctx;
  ctx.F = FqField::get(c.p, c.m);
  ctx.rd = build_root_datum(c.kind, c.n, c.p);
  ctx.prec = std::max(64, start + 4);
  return ctx;
}

CaseReport evaluate(const CaseFile& c, const RunOptions& opt) {
  int start = opt.precision.value_or(c.precision.value_or(0));
  CaseContext ctx = make_context(c, start);
  EnumOptions eo;
  eo.precision_cap = opt.precision_cap;
  eo.start_precision = start;

  CaseReport rep;
  if (c.check == "invariants") {
    LocalChar a = ctx.character(ctx.rd, c.a);
    int N = start > 0 ? start : truncation_level(disc_valuation(a.P()));
    Analysis an;
    for (;; N += 2) {
      if (N > opt.precision_cap) fail(Err::PrecisionExhausted, "analysis failed up to the precision cap");
      try {
        an = analyze(a.truncated(N));
        break;
      } catch (const Error& e) {
        if (e.code() != Err::PrecisionExhausted) throw;
      }
    }
    rep.inv = an.inv;
    rep.precision = N;
    rep.lhs = Cyclo(Rat(an.inv.delta_serre));
    rep.rhs = Cyclo(Rat(an.inv.d - an.inv.c, 2));
    rep.pass = rep.lhs == rep.rhs && an.inv.delta_det == an.inv.delta_serre;
  } else if (c.check == "orbital") {
    Kappa kappa = case_kappa(c, ctx.rd);
    EndoscopicDatum ed = endoscopic_datum(ctx.rd, kappa);
    Fiber fib = enumerate_fiber(ctx.character(ctx.rd, c.a), eo);
    GroupoidCount gc = groupoid_count(fib, kappa);
    rep.inv = fib.an.inv;
    rep.H_kind = ed.H_kind;
    rep.kappa_order = kappa.order;
    rep.precision = fib.N;
    // Neron value against the groupoid value times the conversion constant.
    rep.lhs = gc.neron_value;
    rep.rhs = gc.value * Cyclo(Rat(gc.unit_index));
    rep.conversion_lhs = gc.unit_index;
    rep.pass = rep.lhs == rep.rhs;
  } else if (c.check == "ls") {
    EndoscopicDatum ed = endoscopic_datum(ctx.rd, case_kappa(c, ctx.rd));
    EndoChar h = endo_char(ctx, c);
    rep = ls_check(ed, h, eo);
  } else {
    if (!c.partner) fail(Err::Inconsistent, "nonstandard case without a partner group");
    RootDatum rd2 = build_root_datum(*c.partner, c.n, c.p);
    rep = nonstandard_check(ctx.character(ctx.rd, c.a), ctx.character(rd2, c.a), eo);
  }
  return rep;
}

}  // namespace

LocalChar case_characteristic(const CaseFile& c) {
  CaseContext ctx = make_context(c, c.precision.value_or(0));
  if (c.check != "ls" || c.h_kind == "G") return ctx.character(ctx.rd, c.a);
  return transfer_a(endoscopic_datum(ctx.rd, case_kappa(c)), endo_char(ctx, c));
}

Kappa case_kappa(const CaseFile& c) { return case_kappa(c, build_root_datum(c.kind, c.n, c.p)); }

CaseReport run_case(const CaseFile& c, const RunOptions& opt) {
  auto t0 = std::chrono::steady_clock::now();
  CaseReport rep;
  try {
    rep = evaluate(c, opt);
  } catch (const std::exception& e) {
    rep = CaseReport{};
    rep.error = e.what();
    rep.pass = false;
  }
  rep.case_id = c.case_id;
  rep.check = c.check;
  rep.q = unsigned(c.q());
  rep.kind = c.kind;
  rep.n = c.n;
  if (!c.kappa.empty()) rep.kappa_order = make_kappa(c.kappa).order;
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

namespace {

std::vector<std::vector<int>> partitions(int n) {
  if (n == 2) return {{2}, {1, 1}};
  if (n == 3) return {{3}, {2, 1}, {1, 1, 1}};
  std::vector<std::vector<int>> out{{n}};
  for (int k = 1; k < n; ++k) out.push_back({n - k, k});
  return out;
}

}  // namespace

std::vector<CaseFile> generate_corpus(uint64_t seed, int count, const CorpusRanges& ranges) {
  if (ranges.q.empty() || ranges.kinds.empty() || ranges.n_min < 1 || ranges.n_max < ranges.n_min)
    fail(Err::Inconsistent, "empty corpus ranges");
  if (ranges.check != "ls" && ranges.check != "invariants") fail(Err::Inconsistent, "corpus check must be ls or invariants");
  std::mt19937_64 rng(seed);
  auto pick = [&](int k) { return int(rng() % uint64_t(k)); };
  std::vector<CaseFile> out;
  std::set<std::string> seen;
  long long attempts = 0;
  while (int(out.size()) < count) {
    if (++attempts > 1000LL * count + 10000)
      fail(Err::CombinatorialBlowup, "corpus ranges admit too few distinct regular cases");
    unsigned p = ranges.q[pick(int(ranges.q.size()))];
    int n = ranges.n_min + pick(ranges.n_max - ranges.n_min + 1);
    if (p <= unsigned(n) || !is_prime(p)) continue;
    Kind kind = ranges.kinds[pick(int(ranges.kinds.size()))];
    auto F = FqField::get(p, 1);
    RootDatum rd = build_root_datum(kind, n, p);

    auto rand_series = [&](int vmin) {
      TruncSeries s(F, ranges.depth + 1);
      for (int k = vmin; k <= ranges.depth; ++k) s.at(k) = Elt(pick(int(p)));
      return s;
    };
    auto rand_char = [&](int size) {
      int vmin = pick(4) == 0 ? 0 : 1;
      std::vector<std::string> a;
      for (int i = 0; i < size; ++i) a.push_back(emit_series(rand_series(vmin)));
      return a;
    };

    CaseFile c;
    c.p = p;
    c.kind = kind;
    c.n = n;
    c.check = ranges.check;
    if (ranges.check == "invariants") {
      c.a = rand_char(n);
    } else if (kind == Kind::SL && n == 2 && pick(3) != 0) {
      c.h_kind = pick(2) == 0 ? "torus_unramified" : "torus_split";
      int v = pick(ranges.d_max / 2 + 1);
      if (v > ranges.depth) continue;
      TruncSeries x = rand_series(v);
      x.at(v) = Elt(1 + pick(int(p) - 1));
      c.x = emit_series(x);
      c.kappa = {Rat(1, 2)};
    } else if (kind == Kind::GL) {
      auto parts = partitions(n);
      auto part = parts[pick(int(parts.size()))];
      if (part.size() == 1) {
        c.h_kind = "G";
        c.a = rand_char(n);
        c.kappa.assign(n, Rat(0));
      } else {
        c.h_kind = "levi";
        for (size_t b = 0; b < part.size(); ++b) {
          c.blocks.push_back(rand_char(part[b]));
          for (int i = 0; i < part[b]; ++i) c.kappa.push_back(Rat(static_cast<long long>(b), static_cast<long long>(part.size())));
        }
      }
    } else {
      c.h_kind = "G";
      c.a = rand_char(n);
      c.kappa.assign(rd.rank, Rat(0));
    }

    // reject non-regular, wild or too singular characteristics
    try {
      CaseContext ctx{F, rd, ranges.depth + 1};
      SeriesPoly P;
      if (c.check == "invariants" || c.h_kind == "G") {
        P = ctx.character(rd, c.a).P();
      } else {
        EndoChar h;
        h.kind = c.h_kind;
        if (c.h_kind == "levi") {
          for (auto& b : c.blocks) h.blocks.push_back(ctx.character(build_root_datum(Kind::GL, int(b.size()), p), b));
        } else {
          h.x = parse_series(F, c.x, ranges.depth + 1);
        }
        P = transfer_a(endoscopic_datum(rd, make_kappa(c.kappa)), h).P();
      }
      if (disc_valuation(P) > ranges.d_max) continue;
    } catch (const Error&) {
      continue;
    }
    std::string key = emit_case(c);
    if (!seen.insert(key).second) continue;
    char id[64];
    std::snprintf(id, sizeof id, "corpus-%llu-%04d", (unsigned long long)seed, int(out.size()));
    c.case_id = id;
    out.push_back(c);
  }
  return out;
}

std::vector<CaseReport> run_corpus(uint64_t seed, int count, const CorpusRanges& ranges, const RunOptions& opt) {
  std::vector<CaseReport> out;
  for (auto& c : generate_corpus(seed, count, ranges)) out.push_back(run_case(c, opt));
  std::sort(out.begin(), out.end(), [](const CaseReport& a, const CaseReport& b) { return a.case_id < b.case_id; });
  return out;
}

GlobalFormulas global_formulas(const RootDatum& rd, long long g, long long degD) {
  if (g < 0) fail(Err::HypothesisViolated, "genus must be non-negative");
  if (degD <= 2 * g - 2) fail(Err::HypothesisViolated, "deg D must exceed 2g - 2");
  long long half = (long long)rd.num_roots() * degD / 2;
  GlobalFormulas f;
  f.dimA = half + rd.rank * (1 - g + degD);
  f.dimPa = half + rd.rank * (g - 1);
  f.delta_sum_bound = half;
  return f;
}

std::string report_json(const CaseReport& r, bool with_timing) {
  json inv;
  inv["d"] = r.inv.d;
  inv["c"] = r.inv.c;
  inv["s"] = r.inv.s;
  inv["delta"] = r.inv.delta;
  inv["delta_serre"] = r.inv.delta_serre;
  inv["delta_det"] = r.inv.delta_det;
  inv["pi0"] = r.inv.pi0.str();
  json br = json::array();
  for (auto& b : r.inv.branches) br.push_back({{"e", b.e}, {"f", b.f}, {"slope", rat_str(b.slope)}});
  inv["branches"] = br;
  json rad = json::array();
  for (auto& [ij, v] : r.inv.radicial) rad.push_back({ij.first, ij.second, rat_str(v)});
  inv["radicial"] = rad;

  json j;
  j["case_id"] = r.case_id;
  j["check"] = r.check;
  j["q"] = r.q;
  j["kind"] = kind_name(r.kind);
  j["n"] = r.n;
  j["invariants"] = inv;
  j["H_kind"] = r.H_kind;
  j["r_v"] = r.r_v;
  j["kappa_order"] = r.kappa_order;
  j["simple_case"] = r.simple_case;
  j["lhs"] = r.lhs.str();
  j["rhs"] = r.rhs.str();
  j["conversion_lhs"] = r.conversion_lhs;
  j["conversion_rhs"] = r.conversion_rhs;
  j["precision"] = r.precision;
  j["pass"] = r.pass;
  j["error"] = r.error;
  if (with_timing) j["seconds"] = r.seconds;
  return j.dump();
}

std::string csv_header() { return "case_id,q,kind,n,d,c,delta,r_v,kappa_order,lhs,rhs,pass"; }

std::string report_csv(const CaseReport& r) {
  std::ostringstream os;
  os << r.case_id << ',' << r.q << ',' << kind_name(r.kind) << ',' << r.n << ',' << r.inv.d << ',' << r.inv.c << ','
     << r.inv.delta << ',' << r.r_v << ',' << r.kappa_order << ',' << r.lhs.str() << ',' << r.rhs.str() << ','
     << (r.pass ? "true" : "false");
  return os.str();
}

}  // namespace flc
