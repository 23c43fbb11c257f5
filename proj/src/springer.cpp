#include "flc/springer.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "flc/error.hpp"
#include "flc/linalg.hpp"

namespace flc {

int truncation_level(int d) { return 2 * d + 4; }

namespace {

OMat eta_power(const OrderData& od, const std::vector<int>& component) {
  OMat M = mat_identity(od.F, od.n, od.K);
  for (int i = 0; i < od.num_branches(); ++i)
    for (int k = 0; k < component[i]; ++k) M = mat_compose(od.eta[i], M);
  return M;
}

bool contains_rows(const FqField& F, const FMat& W, const FMat& extra) {
  if (extra.empty()) return true;
  FMat all = W;
  all.insert(all.end(), extra.begin(), extra.end());
  return rank_of(F, all) == int(W.size());
}

}  // namespace

std::vector<FiberPoint> enumerate_component(const OrderData& od, const std::vector<int>& component, long long guard,
                                            long long& candidates) {
  const FqField& F = *od.F;
  const int n = od.n, K = od.K;
  OMat lam = eta_power(od, component);
  OLattice top = OLattice::from_generators(od.F, n, K, lam);
  std::vector<OVec> floor_cols;
  for (const auto& c : od.conductor.columns()) floor_cols.push_back(mat_apply(lam, c));
  std::vector<OLattice> below;  // eta_i * top: L B^flat = top iff L lies in none of these
  for (int i = 0; i < od.num_branches(); ++i)
    below.push_back(OLattice::from_generators(od.F, n, K, mat_compose(od.eta[i], lam)));
  auto normalized = [&](const OLattice& L) {
    for (const auto& b : below)
      if (b.contains(L)) return false;
    return true;
  };

  std::vector<Elt> scalars(F.q());
  std::iota(scalars.begin(), scalars.end(), Elt(0));
  std::vector<FMat> subspaces = all_subspaces(F, scalars, n);

  std::vector<FiberPoint> out;
  std::set<std::vector<uint32_t>> seen{top.key()};
  std::deque<OLattice> queue{top};
  while (!queue.empty()) {
    OLattice L = queue.front();
    queue.pop_front();
    FiberPoint pt;
    pt.lattice = L;
    pt.component = component;
    pt.colength = L.colength();
    pt.ind = pt.colength - od.delta_serre;
    pt.frobenius_image = int(out.size());
    out.push_back(pt);

    const auto& cols = L.columns();
    for (int p : L.pivots())
      if (p >= K) fail(Err::Inconsistent, "lattice escaped the conductor sandwich");
    // t acting on L / e L, as a matrix acting on coordinate rows.
    std::vector<std::vector<Elt>> tbar(n, std::vector<Elt>(n));
    for (int k = 0; k < n; ++k) {
      OVec tc = mat_apply(od.T, cols[k]);
      if (!L.contains(tc)) fail(Err::Inconsistent, "lattice is not stable under t");
      auto z = L.coords(tc);
      for (int j = 0; j < n; ++j) tbar[j][k] = z[j][0];
    }
    FMat fimg;
    for (const auto& c : floor_cols) {
      auto z = L.coords(c);
      std::vector<Elt> row(n);
      for (int j = 0; j < n; ++j) row[j] = z[j][0];
      fimg.push_back(row);
    }
    for (const FMat& W : subspaces) {
      if (int(W.size()) == n) continue;
      if (++candidates > guard) fail(Err::CombinatorialBlowup, "lattice enumeration exceeded the candidate guard");
      if (!contains_rows(F, W, fimg)) continue;
      FMat tW;
      for (const auto& w : W) {
        std::vector<Elt> r(n, 0);
        for (int j = 0; j < n; ++j)
          for (int k = 0; k < n; ++k)
            if (w[k] && tbar[j][k]) r[j] = F.add(r[j], F.mul(tbar[j][k], w[k]));
        tW.push_back(r);
      }
      if (!contains_rows(F, W, tW)) continue;
      std::vector<OVec> gens;
      for (const auto& w : W) {
        OVec v = ovec_zero(od.F, n, K);
        for (int k = 0; k < n; ++k)
          if (w[k]) v = ovec_add(v, ovec_scale(cols[k], TruncSeries::constant(od.F, w[k], K)));
        gens.push_back(v);
      }
      for (const auto& c : cols) gens.push_back(ovec_shift(c, 1));
      OLattice child = OLattice::from_generators(od.F, n, K, gens);
      if (!normalized(child)) continue;
      if (seen.insert(child.key()).second) queue.push_back(child);
    }
  }
  return out;
}

std::vector<std::vector<int>> fiber_signature(const Fiber& f) {
  std::vector<std::vector<int>> sig;
  for (const auto& p : f.points) {
    std::vector<int> s = p.component;
    s.push_back(p.colength);
    s.push_back(p.ind);
    sig.push_back(s);
  }
  std::sort(sig.begin(), sig.end());
  return sig;
}

Fiber enumerate_fiber(const LocalChar& a, const EnumOptions& opt) {
  if (opt.refinement < 1) fail(Err::Inconsistent, "refinement index must be positive");
  int d = disc_valuation(a.P());
  auto run = [&](int N) {
    Fiber f;
    f.N = N;
    f.refinement = opt.refinement;
    f.an = analyze(a.truncated(N));
    const OrderData& od = f.an.ord;
    int nb = od.num_branches();
    // Lambda domain: branch 0 exponent in [0, r); for PGL also the last branch
    // exponent in [0, e_last) to cover the homothety quotient.
    std::vector<int> range(nb, 1);
    range[0] = opt.refinement;
    if (a.rd.kind == Kind::PGL) range[nb - 1] *= od.e[nb - 1];
    std::vector<int> comp(nb, 0);
    for (;;) {
      f.tops.push_back(comp);
      auto pts = enumerate_component(od, comp, opt.guard, f.candidates);
      for (auto& p : pts) {
        p.frobenius_image = int(f.points.size());
        f.points.push_back(p);
      }
      int i = 0;
      while (i < nb && ++comp[i] == range[i]) comp[i++] = 0;
      if (i == nb) break;
    }
    return f;
  };
  int N = opt.start_precision > 0 ? opt.start_precision : truncation_level(d);
  for (;;) {
    if (N > opt.precision_cap) fail(Err::PrecisionExhausted, "enumeration unstable up to the precision cap");
    try {
      Fiber f = run(N);
      if (!opt.check_stability) return f;
      Fiber g = run(N + 2);
      if (fiber_signature(f) == fiber_signature(g)) return f;
    } catch (const Error& e) {
      if (e.code() != Err::PrecisionExhausted) throw;
    }
    N += 2;
  }
}

ClassData class_data(const Analysis& an, const Kappa& kappa) {
  ClassData cd;
  const OrderData& od = an.ord;
  const RootDatum& rd = an.a.rd;
  const FqField& F = *od.F;
  cd.g_e = 0;
  for (int e : od.e) cd.g_e = std::gcd(cd.g_e, e);
  cd.g = 0;
  for (int f : od.f) cd.g = std::gcd(cd.g, f);
  IntMat tau = rd.permutation_action(an.br.tau);
  IntMat sigma = rd.permutation_action(an.br.sigma);
  cd.tors = fixed_torsion_of_coinvariants(rd.rank, {tau}, sigma);

  bool kappa_trivial = std::all_of(kappa.values.begin(), kappa.values.end(), [](const Rat& r) { return r == Rat(0); });
  if (rd.kind != Kind::SL) {
    cd.classes.push_back(H1Class{0, 0, Cyclo(Rat(1))});
    return cd;
  }

  const long long qm1 = (long long)F.q() - 1;
  const int a = od.num_branches();
  std::vector<long long> logs(a);
  for (int i = 0; i < a; ++i) logs[i] = (long long)F.log(od.eta_norm_lead[i]);
  // Relation lattice in Z^2, generators as columns.
  IntMat R(2);
  auto add_gen = [&](long long x, long long y) {
    R[0].push_back(x);
    R[1].push_back(y);
  };
  add_gen(0, qm1);
  for (int i = 0; i < a; ++i) {
    add_gen(od.f[i], logs[i]);
    add_gen(0, od.e[i]);
  }
  SNF snf = smith_normal_form(R);
  auto in_R = [&](long long x, long long y) {
    for (int i = 0; i < 2; ++i) {
      long long v = snf.U[i][0] * x + snf.U[i][1] * y;
      long long d = i < int(snf.diag.size()) ? snf.diag[i] : 0;
      if (d == 0 ? v != 0 : v % d != 0) return false;
    }
    return true;
  };
  for (int v = 0; v < cd.g; ++v)
    for (long long l = 0; l < qm1; ++l) {
      bool fresh = true;
      for (const auto& c : cd.classes)
        if (in_R(v - c.v, l - c.log)) {
          fresh = false;
          break;
        }
      if (fresh) cd.classes.push_back(H1Class{v, l, Cyclo(Rat(1))});
    }
  if (cd.classes.size() > 1 && !kappa_trivial) {
    if (rd.n != 2) fail(Err::UnsupportedKappa, "kappa pairing with H^1 is implemented for SL_2 only");
    if (cd.classes.size() != 2 || kappa.values[0] != Rat(1, 2))
      fail(Err::UnsupportedKappa, "kappa is not Frobenius invariant for this torus");
    cd.classes[1].kappa = Cyclo::zeta_pow(2, 1);
  }

  // [Z^a_0 : Im]: Im is cut out of Z^a_0 by sum k_i log c_i = 0 mod g'.
  long long gp = qm1;
  for (int e : od.e) gp = std::gcd(gp, (long long)e);
  long long acc = gp;
  std::vector<int> k(a, -4);
  for (;;) {
    long long s = 0, lg = 0;
    for (int i = 0; i < a; ++i) {
      s += (long long)od.f[i] * k[i];
      lg += k[i] * logs[i];
    }
    if (s == 0) acc = std::gcd(acc, ((lg % gp) + gp) % gp);
    int i = 0;
    while (i < a && ++k[i] > 4) k[i++] = -4;
    if (i == a) break;
  }
  cd.im_index = gp / acc;
  return cd;
}

void frobenius_and_classes(Fiber& fib, const ClassData& cd) {
  for (size_t i = 0; i < fib.points.size(); ++i) {
    auto& p = fib.points[i];
    p.frobenius_image = int(i);
    p.stabilizer_order = 1;
    p.h1_class = ((-p.ind) % cd.g + cd.g) % cd.g;
  }
}

GroupoidCount groupoid_count(const Fiber& fib, const Kappa& kappa) {
  GroupoidCount gc;
  const OrderData& od = fib.an.ord;
  ClassData cd = class_data(fib.an, kappa);
  gc.unit_index = unit_index(od).neron_constant;
  const long long r = fib.refinement;
  const long long npts = (long long)fib.points.size();
  Cyclo total(Rat(0));
  switch (fib.an.a.rd.kind) {
    case Kind::GL: {
      Rat O(npts, r);
      gc.class_values.push_back(O);
      gc.breakdown[0] = {npts, 1};
      total = Cyclo(O);
      break;
    }
    case Kind::PGL: {
      long long e_last = od.e.back();
      Rat O = Rat(npts * cd.g_e, r * cd.tors * e_last);
      gc.class_values.push_back(O);
      gc.breakdown[0] = {npts, 1};
      total = Cyclo(O);
      break;
    }
    case Kind::SL: {
      for (size_t c = 0; c < cd.classes.size(); ++c) {
        long long cnt = 0;
        for (const auto& p : fib.points)
          if (((p.ind + cd.classes[c].v) % cd.g + cd.g) % cd.g == 0) ++cnt;
        Rat O(cnt * cd.im_index, r * cd.tors);
        gc.class_values.push_back(O);
        gc.breakdown[int(c)] = {cnt, 1};
        total = total + cd.classes[c].kappa * Cyclo(O);
      }
      break;
    }
  }
  gc.neron_value = total;
  gc.value = total / Rat(gc.unit_index);
  return gc;
}

}  // namespace flc
