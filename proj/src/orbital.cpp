#include "flc/orbital.hpp"

#include "flc/error.hpp"

namespace flc {

const char* normalization_name(Normalization n) {
  return n == Normalization::NeronConnected ? "NeronConnected" : "ConnectedModel";
}

namespace {

OrbitalValue from_count(const GroupoidCount& gc, Normalization norm) {
  OrbitalValue ov;
  ov.norm = norm;
  ov.conversion = gc.unit_index;
  ov.value = norm == Normalization::NeronConnected ? gc.neron_value : gc.value;
  ov.breakdown = gc.class_values;
  return ov;
}

Kappa trivial_kappa(int rank) { return make_kappa(std::vector<Rat>(rank, Rat(0))); }

Cyclo q_power(unsigned q, int r) {
  long long x = 1;
  for (int i = 0; i < r; ++i) x *= q;
  return Cyclo(Rat(x));
}

}  // namespace

OrbitalValue kappa_orbital(const LocalChar& a, const Kappa& kappa, Normalization norm, const EnumOptions& opt) {
  Fiber fib = enumerate_fiber(a, opt);
  return from_count(groupoid_count(fib, kappa), norm);
}

OrbitalValue stable_orbital_H(const EndoscopicDatum& ed, const EndoChar& aH, Normalization norm,
                              const EnumOptions& opt) {
  if (aH.kind == "G") return kappa_orbital(aH.blocks.at(0), trivial_kappa(ed.parent.rank), norm, opt);
  if (aH.kind == "torus_unramified" || aH.kind == "torus_split") {
    // The torus fiber is one point and J = J^flat, so both normalizations give 1.
    OrbitalValue ov;
    ov.norm = norm;
    ov.value = Cyclo(Rat(1));
    ov.breakdown = {Rat(1)};
    return ov;
  }
  if (aH.kind == "levi") {
    OrbitalValue ov;
    ov.norm = norm;
    ov.value = Cyclo(Rat(1));
    for (const auto& b : aH.blocks) {
      LocalChar g = b;
      g.rd = build_root_datum(Kind::GL, b.n(), ed.parent.p);
      OrbitalValue bv = kappa_orbital(g, trivial_kappa(g.rd.rank), norm, opt);
      ov.value = ov.value * bv.value;
      ov.conversion *= bv.conversion;
    }
    ov.breakdown = {ov.value.is_rational() ? ov.value.rational() : Rat(0)};
    return ov;
  }
  fail(Err::UnsupportedH, "endoscopic group kind '" + aH.kind + "' is not supported");
}

CaseReport ls_check(const EndoscopicDatum& ed, const EndoChar& aH, const EnumOptions& opt) {
  CaseReport rep;
  rep.check = "ls";
  LocalChar a = transfer_a(ed, aH);
  Fiber fib = enumerate_fiber(a, opt);
  GroupoidCount gc = groupoid_count(fib, ed.kappa);
  rep.q = unsigned(a.F->q());
  rep.kind = a.rd.kind;
  rep.n = a.n();
  rep.inv = fib.an.inv;
  rep.H_kind = ed.H_kind;
  rep.kappa_order = ed.kappa.order;
  rep.precision = fib.N;
  rep.r_v = resultant_valuation_H(ed, aH);
  rep.simple_case = detect_simple_case(rep.inv, ed);
  rep.inv.simple_case = rep.simple_case;
  rep.lhs = gc.neron_value;
  rep.conversion_lhs = gc.unit_index;
  OrbitalValue so = stable_orbital_H(ed, aH, Normalization::NeronConnected, opt);
  rep.conversion_rhs = so.conversion;
  rep.rhs = q_power(rep.q, rep.r_v) * so.value;
  rep.pass = rep.lhs == rep.rhs;
  return rep;
}

CaseReport nonstandard_check(const LocalChar& a1, const LocalChar& a2, const EnumOptions& opt) {
  if (!nonstandard_pair_check(a1.rd, a2.rd, a1.F->p()))
    fail(Err::HypothesisViolated, "root data do not form a non-standard pair in this characteristic");
  if (a1.a.size() != a2.a.size()) fail(Err::Inconsistent, "characteristics have different lengths");
  CaseReport rep;
  rep.check = "nonstandard";
  Fiber f1 = enumerate_fiber(a1, opt);
  Fiber f2 = enumerate_fiber(a2, opt);
  GroupoidCount g1 = groupoid_count(f1, trivial_kappa(a1.rd.rank));
  GroupoidCount g2 = groupoid_count(f2, trivial_kappa(a2.rd.rank));
  rep.q = unsigned(a1.F->q());
  rep.kind = a1.rd.kind;
  rep.n = a1.n();
  rep.inv = f1.an.inv;
  rep.H_kind = kind_name(a2.rd.kind);
  rep.precision = std::max(f1.N, f2.N);
  rep.lhs = g1.neron_value;
  rep.rhs = g2.neron_value;
  rep.conversion_lhs = g1.unit_index;
  rep.conversion_rhs = g2.unit_index;
  rep.pass = rep.lhs == rep.rhs;
  return rep;
}

}  // namespace flc
