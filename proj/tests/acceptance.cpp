// Acceptance suite: one PASS/FAIL line per criterion; exit status 0 iff all pass.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "flc/error.hpp"
#include "flc/flcheck.hpp"

using namespace flc;

namespace {

// Pinned limits.
constexpr double kLsSeconds = 60.0;
constexpr int kLsMaxPrecision = 16;
constexpr int kMinSimpleCases = 20;
constexpr int kDeltaCorpus = 200;
constexpr double kTreeSeconds = 120.0;
constexpr int kMinNonstandard = 6;
constexpr int kRefinementCases = 20;
constexpr int kFormulaRandomTuples = 20;
constexpr uint64_t kLsCorpusSeed = 2024;
constexpr int kLsCorpusSize = 300;
constexpr uint64_t kDeltaSeed = 7;

struct Outcome {
  bool pass = true;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

long long ipow(long long q, int m) {
  long long r = 1;
  for (int i = 0; i < m; ++i) r *= q;
  return r;
}

std::string note(std::ostringstream& os, const std::string& s) {
  os << s;
  return os.str();
}

LocalChar pure(Kind kind, unsigned p, long long c, int k) {
  auto F = FqField::get(p, 1);
  TruncSeries a2(F, 16);
  a2.at(k) = F->neg(F->from_int(c));
  return make_local_char(build_root_datum(kind, 2, p), F, {TruncSeries(F, 16), a2});
}

Kappa trivial(const LocalChar& a) { return make_kappa(std::vector<Rat>(a.rd.rank, Rat(0))); }

const std::vector<CaseFile>& ls_corpus() {
  static const std::vector<CaseFile> corpus = generate_corpus(kLsCorpusSeed, kLsCorpusSize, CorpusRanges{});
  return corpus;
}

// 1. O^kappa = q^m SO_H for SL_2, kappa = -1, unramified elliptic a_H of depth m.
Outcome ls_suite() {
  Outcome o;
  std::ostringstream os;
  int n = 0;
  for (unsigned p : {3u, 5u, 7u}) {
    for (int m = 0; m <= 2; ++m) {
      CaseFile c;
      c.case_id = "ls-q" + std::to_string(p) + "-m" + std::to_string(m);
      c.p = p;
      c.kind = Kind::SL;
      c.n = 2;
      c.check = "ls";
      c.h_kind = "torus_unramified";
      c.x = m == 0 ? "1" : m == 1 ? "1*e" : "1*e^" + std::to_string(m);
      c.kappa = {Rat(1, 2)};
      CaseReport r = run_case(c);
      bool ok = r.pass && r.r_v == m && r.lhs == Cyclo(Rat(ipow(p, m))) && r.seconds < kLsSeconds &&
                r.precision <= kLsMaxPrecision;
      if (!ok) {
        o.pass = false;
        os << c.case_id << " lhs=" << r.lhs.str() << " rhs=" << r.rhs.str() << " " << r.error << "; ";
      }
      ++n;
    }
  }
  o.pass = o.pass && n >= 9;
  o.detail = note(os, std::to_string(n) + " cases");
  return o;
}

// 2. Simple cases: groupoid count times unit index equals q.
Outcome simple_cases() {
  Outcome o;
  std::ostringstream os;
  int simple = 0;
  for (auto& c : ls_corpus()) {
    CaseReport r = run_case(c);
    if (!r.simple_case) continue;
    ++simple;
    GroupoidCount gc = groupoid_count(enumerate_fiber(case_characteristic(c)), case_kappa(c));
    if (gc.value * Cyclo(Rat(gc.unit_index)) != Cyclo(Rat(c.q()))) {
      o.pass = false;
      os << c.case_id << " value=" << gc.value.str() << " index=" << gc.unit_index << "; ";
    }
  }
  if (simple < kMinSimpleCases) o.pass = false;
  o.detail = note(os, std::to_string(simple) + " simple cases");
  return o;
}

// 3. dim B^flat / B = (d - c)/2 on a random tame corpus.
Outcome delta_consistency() {
  Outcome o;
  std::ostringstream os;
  CorpusRanges r;
  r.check = "invariants";
  r.n_min = 2;
  r.n_max = 3;
  r.d_max = 6;
  int fails = 0, n = 0;
  for (auto& rep : run_corpus(kDeltaSeed, kDeltaCorpus, r)) {
    ++n;
    bool ok = rep.pass && rep.inv.d <= 6 && 2 * rep.inv.delta_serre == rep.inv.d - rep.inv.c &&
              rep.inv.delta_det == rep.inv.delta_serre;
    if (!ok) {
      ++fails;
      os << rep.case_id << " " << rep.error << "; ";
    }
  }
  o.pass = fails == 0 && n == kDeltaCorpus;
  o.detail = note(os, std::to_string(n) + " cases, " + std::to_string(fails) + " failures");
  return o;
}

// 4. Point totals 1 + (q+1)(q^delta - 1)/(q - 1) for unramified elliptic GL_2.
Outcome tree_ball() {
  Outcome o;
  std::ostringstream os;
  int n = 0;
  for (unsigned p : {3u, 5u}) {
    long long D0 = least_nonsquare(*FqField::get(p, 1));
    for (int delta = 1; delta <= 3; ++delta) {
      auto t0 = std::chrono::steady_clock::now();
      Fiber fib = enumerate_fiber(pure(Kind::GL, p, D0, 2 * delta));
      double s = seconds_since(t0);
      long long expect = 1 + (p + 1) * (ipow(p, delta) - 1) / (p - 1);
      ++n;
      if ((long long)fib.points.size() != expect || fib.an.inv.delta != delta || s >= kTreeSeconds) {
        o.pass = false;
        os << "q=" << p << " delta=" << delta << " got " << fib.points.size() << " want " << expect << "; ";
      }
    }
  }
  o.detail = note(os, std::to_string(n) + " cases");
  return o;
}

// 5. Depth-one chain values q/(q-1) (split) and q/(q+1) (nonsplit, kappa-weighted).
Outcome chain_values() {
  Outcome o;
  std::ostringstream os;
  int n = 0;
  for (unsigned p : {3u, 5u, 7u}) {
    long long q = p;
    for (Kind k : {Kind::SL, Kind::GL}) {
      LocalChar a = pure(k, p, 1, 2);
      Cyclo v = groupoid_count(enumerate_fiber(a), trivial(a)).value;
      ++n;
      if (v != Cyclo(Rat(q, q - 1))) {
        o.pass = false;
        os << kind_name(k) << " q=" << q << " split " << v.str() << "; ";
      }
    }
    LocalChar a = pure(Kind::SL, p, least_nonsquare(*FqField::get(p, 1)), 2);
    Cyclo v = groupoid_count(enumerate_fiber(a), make_kappa({Rat(1, 2)})).value;
    ++n;
    if (v != Cyclo(Rat(q, q + 1))) {
      o.pass = false;
      os << "q=" << q << " nonsplit " << v.str() << "; ";
    }
  }
  o.detail = note(os, std::to_string(n) + " values");
  return o;
}

// 6. Stable orbitals on SL_2 and PGL_2 agree.
Outcome nonstandard() {
  Outcome o;
  std::ostringstream os;
  int n = 0;
  for (unsigned p : {3u, 5u}) {
    long long D0 = least_nonsquare(*FqField::get(p, 1));
    for (int k = 1; k <= 4; ++k) {
      for (long long c : {1LL, D0}) {
        LocalChar sl = pure(Kind::SL, p, c, k), pgl = pure(Kind::PGL, p, c, k);
        if (disc_valuation(sl.P()) > 4) continue;
        CaseReport r = nonstandard_check(sl, pgl);
        ++n;
        if (!r.pass) {
          o.pass = false;
          os << "q=" << p << " c=" << c << " k=" << k << " " << r.lhs.str() << " vs " << r.rhs.str() << "; ";
        }
      }
    }
  }
  if (n < kMinNonstandard) o.pass = false;
  o.detail = note(os, std::to_string(n) + " cases");
  return o;
}

// 7. Groupoid counts unchanged under index-2 and index-3 refinement of Lambda.
Outcome refinement() {
  Outcome o;
  std::ostringstream os;
  int n = 0;
  for (auto& c : ls_corpus()) {
    if (n == kRefinementCases) break;
    LocalChar a = case_characteristic(c);
    Kappa kappa = case_kappa(c);
    Fiber base = enumerate_fiber(a);
    if (base.points.size() < 2) continue;  // skip trivial fibres
    ++n;
    Cyclo v = groupoid_count(base, kappa).neron_value;
    for (int r : {2, 3}) {
      EnumOptions opt;
      opt.refinement = r;
      Cyclo w = groupoid_count(enumerate_fiber(a, opt), kappa).neron_value;
      if (w != v) {
        o.pass = false;
        os << c.case_id << " r=" << r << " " << w.str() << " vs " << v.str() << "; ";
      }
    }
  }
  if (n < kRefinementCases) o.pass = false;
  o.detail = note(os, std::to_string(n) + " cases");
  return o;
}

// 8. Enumeration identical at N = truncation_level and N + 2.
Outcome stability() {
  Outcome o;
  std::ostringstream os;
  int n = 0;
  for (auto& c : ls_corpus()) {
    LocalChar a = case_characteristic(c);
    int N = truncation_level(disc_valuation(a.P()));
    EnumOptions opt;
    opt.check_stability = false;
    opt.start_precision = N;
    Fiber lo = enumerate_fiber(a, opt);
    opt.start_precision = N + 2;
    Fiber hi = enumerate_fiber(a, opt);
    ++n;
    if (lo.N != N || fiber_signature(lo) != fiber_signature(hi)) {
      o.pass = false;
      os << c.case_id << "; ";
    }
  }
  o.detail = note(os, std::to_string(n) + " cases");
  return o;
}

// 9. Global formulas on hand-computed tuples and the identity dimA + dimPa = (r + #Phi) degD.
Outcome formulas() {
  Outcome o;
  std::ostringstream os;
  struct Fixed {
    Kind kind;
    int n;
    long long g, degD, dimA, dimPa;
  };
  const std::vector<Fixed> fixed{{Kind::SL, 2, 0, 2, 5, 1},
                                 {Kind::GL, 1, 1, 1, 1, 0},
                                 {Kind::GL, 2, 1, 3, 9, 3},
                                 {Kind::SL, 3, 0, 1, 7, 1},
                                 {Kind::PGL, 2, 2, 4, 7, 5}};
  for (auto& f : fixed) {
    auto r = global_formulas(build_root_datum(f.kind, f.n, 7), f.g, f.degD);
    if (r.dimA != f.dimA || r.dimPa != f.dimPa) {
      o.pass = false;
      os << kind_name(f.kind) << f.n << " g=" << f.g << " degD=" << f.degD << "; ";
    }
  }
  try {
    global_formulas(build_root_datum(Kind::SL, 2, 7), 2, 2);
    o.pass = false;
    os << "degD = 2g - 2 accepted; ";
  } catch (const Error& e) {
    if (e.code() != Err::HypothesisViolated) o.pass = false;
  }
  std::mt19937_64 rng(99);
  for (int i = 0; i < kFormulaRandomTuples; ++i) {
    Kind k = std::vector<Kind>{Kind::GL, Kind::SL, Kind::PGL}[rng() % 3];
    int n = 1 + int(rng() % 5);
    if (k != Kind::GL && n == 1) n = 2;
    long long g = rng() % 6, degD = 2 * g - 1 + (long long)(rng() % 10);
    auto rd = build_root_datum(k, n, 7);
    auto r = global_formulas(rd, g, degD);
    if (r.dimA + r.dimPa != (rd.rank + rd.num_roots()) * degD) {
      o.pass = false;
      os << "identity fails at " << kind_name(k) << n << "; ";
    }
  }
  o.detail = note(os, std::to_string(fixed.size()) + " fixed, " + std::to_string(kFormulaRandomTuples) + " random");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"LS identity suite (SL_2, kappa = -1, q in {3,5,7}, depth 0..2)", ls_suite},
      {"simple-case closed form", simple_cases},
      {"delta consistency on a random corpus", delta_consistency},
      {"tree-ball law for unramified GL_2", tree_ball},
      {"chain-example values", chain_values},
      {"non-standard identity SL_2 / PGL_2", nonstandard},
      {"Lambda independence under refinement", refinement},
      {"precision stability at N and N + 2", stability},
      {"global formula evaluators", formulas}};
  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    if (!o.pass) ++failed;
    std::printf("criterion %zu: %s  %s [%s] (%.1fs)\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first.c_str(),
                o.detail.c_str(), seconds_since(t0));
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", int(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
