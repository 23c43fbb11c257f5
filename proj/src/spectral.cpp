#include "flc/spectral.hpp"

#include <algorithm>
#include <climits>
#include <unordered_map>

#include "flc/error.hpp"
#include "flc/linalg.hpp"

namespace flc {

int LocalChar::prec() const {
  int p = INT_MAX;
  for (auto& x : a) p = std::min(p, x.prec());
  return a.empty() ? 0 : p;
}

LocalChar LocalChar::truncated(int N) const {
  LocalChar r = *this;
  for (auto& x : r.a) {
    TruncSeries t(F, N);
    for (int i = 0; i < std::min(N, x.prec()); ++i) t.at(i) = x[i];
    x = t;
  }
  return r;
}

LocalChar make_local_char(const RootDatum& rd, const FieldPtr& F, const std::vector<TruncSeries>& a) {
  if (int(a.size()) != rd.n) fail(Err::Inconsistent, "characteristic has the wrong length");
  LocalChar lc;
  lc.rd = rd;
  lc.F = F;
  lc.a = a;
  return lc;
}

std::vector<std::vector<TruncSeries>> companion_point(const LocalChar& a) { return companion_point(a.a); }

namespace {

// Laurent series w^o * (c_0 + c_1 w + ...), known to absolute precision o + |c|.
struct LSer {
  int o = 0;
  std::vector<Elt> c;

  int abs_prec() const { return o + int(c.size()); }
  Elt at(int k) const {
    int i = k - o;
    return (i >= 0 && i < int(c.size())) ? c[i] : 0;
  }
  void normalize() {
    size_t z = 0;
    while (z < c.size() && c[z] == 0) ++z;
    o += int(z);
    c.erase(c.begin(), c.begin() + z);
  }
  bool is_zero() const {
    for (Elt x : c)
      if (x) return false;
    return true;
  }
  int val() const {
    for (size_t i = 0; i < c.size(); ++i)
      if (c[i]) return o + int(i);
    return INT_MAX;
  }
};

LSer ls_add(const FqField& K, const LSer& a, const LSer& b, bool sub = false) {
  LSer r;
  r.o = std::min(a.o, b.o);
  int top = std::min(a.abs_prec(), b.abs_prec());
  r.c.assign(std::max(0, top - r.o), 0);
  for (int k = r.o; k < top; ++k) {
    Elt y = b.at(k);
    r.c[k - r.o] = sub ? K.sub(a.at(k), y) : K.add(a.at(k), y);
  }
  return r;
}

LSer ls_mul(const FqField& K, LSer a, LSer b) {
  a.normalize();
  b.normalize();
  LSer r;
  r.o = a.o + b.o;
  size_t len = std::min(a.c.size(), b.c.size());
  r.c.assign(len, 0);
  for (size_t i = 0; i < len; ++i) {
    if (!a.c[i]) continue;
    for (size_t j = 0; i + j < len; ++j)
      if (b.c[j]) r.c[i + j] = K.add(r.c[i + j], K.mul(a.c[i], b.c[j]));
  }
  return r;
}

LSer ls_inv(const FqField& K, LSer a) {
  a.normalize();
  if (a.c.empty()) fail(Err::PrecisionExhausted, "pivot vanishes to known precision");
  size_t len = a.c.size();
  std::vector<Elt> r(len, 0);
  Elt i0 = K.inv(a.c[0]);
  r[0] = i0;
  for (size_t k = 1; k < len; ++k) {
    Elt s = 0;
    for (size_t j = 1; j <= k; ++j)
      if (a.c[j] && r[k - j]) s = K.add(s, K.mul(a.c[j], r[k - j]));
    r[k] = K.neg(K.mul(s, i0));
  }
  return LSer{-a.o, r};
}

LSer ls_from_series(const TruncSeries& s, int o = 0) { return LSer{o, s.coeffs()}; }

LSer ls_const(Elt x, int prec) {
  LSer r;
  r.c.assign(prec, 0);
  if (prec > 0) r.c[0] = x;
  return r;
}

using LMat = std::vector<std::vector<LSer>>;  // row-major

// Inverse by Gauss-Jordan with minimal-valuation pivots.
LMat ls_inverse(const FqField& K, LMat A, int prec) {
  int n = int(A.size());
  LMat I(n, std::vector<LSer>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) I[i][j] = ls_const(i == j ? 1 : 0, prec);
  for (int c = 0; c < n; ++c) {
    int best = -1, bv = INT_MAX;
    for (int r = c; r < n; ++r) {
      int v = A[r][c].val();
      if (v < bv) {
        bv = v;
        best = r;
      }
    }
    if (best < 0) fail(Err::PrecisionExhausted, "matrix is singular to known precision");
    std::swap(A[c], A[best]);
    std::swap(I[c], I[best]);
    LSer piv = ls_inv(K, A[c][c]);
    for (int j = 0; j < n; ++j) {
      A[c][j] = ls_mul(K, A[c][j], piv);
      I[c][j] = ls_mul(K, I[c][j], piv);
    }
    for (int r = 0; r < n; ++r) {
      if (r == c || A[r][c].is_zero()) continue;
      LSer f = A[r][c];
      for (int j = 0; j < n; ++j) {
        A[r][j] = ls_add(K, A[r][j], ls_mul(K, f, A[c][j]), true);
        I[r][j] = ls_add(K, I[r][j], ls_mul(K, f, I[c][j]), true);
      }
    }
  }
  return I;
}

struct Ctx {
  FieldPtr F, Kf;
  std::vector<Elt> emb;
  std::unordered_map<Elt, Elt> back;
  int E = 1, R = 0, n = 0;

  Elt down(Elt x) const {
    auto it = back.find(x);
    if (it == back.end()) fail(Err::Inconsistent, "value does not descend to the base field");
    return it->second;
  }
  // Series over the base in e, as a series in w of precision R (exact input).
  TruncSeries to_w(const TruncSeries& s) const {
    TruncSeries r(Kf, R);
    for (int k = 0; k < s.prec() && k * E < R; ++k)
      if (s[k]) r.at(k * E) = emb[s[k]];
    return r;
  }
  // Laurent w-series with coefficients in F_q at multiples of E, to base e-series.
  TruncSeries to_eps(const LSer& x, int K) const {
    if (x.abs_prec() < E * K) fail(Err::PrecisionExhausted, "insufficient precision converting to base series");
    TruncSeries r(F, K);
    for (int k = std::min(x.o, 0); k < E * K; ++k) {
      Elt v = x.at(k);
      if (!v) continue;
      if (k < 0 || k % E) fail(Err::Inconsistent, "element is not integral over the base");
      r.at(k / E) = down(v);
    }
    return r;
  }
};

// Columns of the Hermite basis with pivot monomials made explicit, precision N.
std::vector<OVec> exact_cols(const OLattice& L, int N) {
  std::vector<OVec> out;
  const FieldPtr& F = L.field();
  for (int j = 0; j < L.n(); ++j) {
    OVec c(L.n());
    for (int i = 0; i < L.n(); ++i) {
      TruncSeries t(F, N);
      if (L.K() > 0)
        for (int r = 0; r < std::min(N, L.K()); ++r) t.at(r) = L.columns()[j][i][r];
      c[i] = t;
    }
    c[j] = TruncSeries::monomial(F, 1, L.pivots()[j], N);
    out.push_back(c);
  }
  return out;
}

TruncSeries pad_to(const TruncSeries& s, int N) {
  TruncSeries r(s.field(), N);
  for (int i = 0; i < std::min(N, s.prec()); ++i) r.at(i) = s[i];
  return r;
}

// Product of two elements of O[t]/P given in t-coordinates, reduced mod P.
OVec mul_mod_P(const OVec& x, const OVec& y, const SeriesPoly& P, int N) {
  int n = int(x.size());
  FieldPtr F = x[0].field();
  std::vector<TruncSeries> prod(2 * n - 1, TruncSeries(F, N));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) prod[i + j] = prod[i + j] + pad_to(x[i], N) * pad_to(y[j], N);
  for (int k = 2 * n - 2; k >= n; --k) {
    TruncSeries c = prod[k];
    if (c.is_zero()) continue;
    for (int i = 0; i < n; ++i) prod[k - n + i] = prod[k - n + i] - c * pad_to(P[i], N);
  }
  prod.resize(n);
  return prod;
}

}  // namespace

Elt OrderData::residue_of(const OVec& x, int i) const {
  Elt s = 0;
  for (int k = 0; k < n; ++k) {
    Elt c = x[k][0];
    if (c) s = Kf->add(s, Kf->mul(Kf->embedding(*F)[c], residue[i][k]));
  }
  return s;
}

bool OrderData::is_normalized(const OLattice& L) const {
  for (int i = 0; i < num_branches(); ++i) {
    bool hit = false;
    for (int j = 0; j < n && !hit; ++j)
      if (residue_of(L.columns()[j], i)) hit = true;
    if (!hit) return false;
  }
  return true;
}

std::vector<std::pair<std::pair<int, int>, Rat>> radicial_valuations(const BranchData& br) {
  std::vector<std::pair<std::pair<int, int>, Rat>> out;
  int n = br.n();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      int v = (br.roots[i] - br.roots[j]).val();
      if (v >= br.root_prec) fail(Err::PrecisionExhausted, "roots not separated");
      out.push_back({{i, j}, Rat(v, br.E)});
    }
  return out;
}

Analysis analyze(const LocalChar& a) {
  Analysis an;
  an.a = a;
  const int n = a.n();
  const FieldPtr F = a.F;
  SeriesPoly P = a.P();
  const int d = disc_valuation(P);
  an.br = factor_tame(P, 3 * d + 12);
  const BranchData& br = an.br;

  Ctx cx;
  cx.F = F;
  cx.Kf = br.K;
  cx.emb = br.embed;
  for (Elt x = 0; x < cx.emb.size(); ++x) cx.back[cx.emb[x]] = x;
  cx.E = br.E;
  cx.R = br.root_prec;
  cx.n = n;
  const FqField& K = *cx.Kf;
  const int E = cx.E, R = cx.R;

  // Powers of the roots.
  std::vector<std::vector<TruncSeries>> pw(n);
  for (int j = 0; j < n; ++j) {
    TruncSeries x = TruncSeries::constant(cx.Kf, 1, R);
    for (int i = 0; i < n; ++i) {
      pw[j].push_back(x);
      x = x * br.roots[j];
    }
  }
  auto eval_at = [&](const OVec& col, int j) {
    TruncSeries s(cx.Kf, R);
    for (int i = 0; i < n; ++i) s = s + cx.to_w(col[i]) * pw[j][i];
    return s;
  };

  // Saturation: grow B towards B^flat one e-step at a time.
  OrderData& od = an.ord;
  od.F = F;
  od.n = n;
  OLattice Y = OLattice::full(F, n, 0);
  int S = 0, dserre = 0;
  for (;;) {
    if (E * (S + 1) > R) fail(Err::PrecisionExhausted, "root precision too low for saturation");
    auto cols = exact_cols(Y, S + 1);
    FMat rows;
    std::vector<std::vector<TruncSeries>> vals(n);
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j) vals[k].push_back(eval_at(cols[k], j));
    for (int j = 0; j < n; ++j)
      for (int r = E * S; r < E * (S + 1); ++r) {
        std::vector<Elt> row(n);
        for (int k = 0; k < n; ++k) row[k] = vals[k][j][r];
        rows.push_back(row);
      }
    FMat ker = kernel_basis(K, rows, n);
    if (ker.empty()) break;
    dserre += int(ker.size());
    std::vector<OVec> gens;
    for (auto& c : cols) gens.push_back(ovec_shift(c, 1));
    for (auto& w : ker) {
      OVec g = ovec_zero(F, n, S + 1);
      for (int k = 0; k < n; ++k) {
        Elt x = cx.down(w[k]);
        if (x) g = ovec_add(g, ovec_scale(cols[k], TruncSeries::constant(F, x, S + 1)));
      }
      gens.push_back(g);
    }
    ++S;
    Y = OLattice::from_generators(F, n, S, gens);
    if (S > d + 1) fail(Err::Inconsistent, "saturation did not terminate");
  }
  od.S = S;
  od.Y = Y;
  od.delta_serre = dserre;
  const int Kw = 2 * dserre + 4;
  od.K = Kw;
  const int M = 2 * S + Kw + 2;
  auto Ycols = exact_cols(Y, M);
  OLattice YB = OLattice::from_generators(F, n, M, Ycols);
  auto to_K = [&](std::vector<TruncSeries> z) {
    for (auto& x : z) x = x.truncate(Kw);
    return z;
  };

  // Multiplication by t, the inclusion B -> B^flat, and structure constants.
  SeriesPoly Pm;
  for (auto& c : P) Pm.push_back(pad_to(c, M));
  for (int k = 0; k < n; ++k) {
    OVec v(n, TruncSeries(F, M));
    const OVec& y = Ycols[k];
    for (int i = 0; i < n; ++i) {
      if (i > 0) v[i] = y[i - 1];
      v[i] = v[i] - Pm[i] * y[n - 1];
    }
    od.T.push_back(to_K(YB.coords(v)));
  }
  for (int i = 0; i < n; ++i) {
    OVec v = ovec_zero(F, n, M);
    v[i] = TruncSeries::monomial(F, 1, S, M);
    od.embed.push_back(to_K(YB.coords(v)));
  }
  for (int k = 0; k < n; ++k) {
    OMat Mk;
    for (int l = 0; l < n; ++l) {
      auto z = YB.coords(mul_mod_P(Ycols[k], Ycols[l], Pm, M));
      for (auto& x : z) {
        if (x.val() < S) fail(Err::Inconsistent, "B-flat basis is not closed under multiplication");
        TruncSeries y(F, Kw);
        for (int r = 0; r < Kw; ++r) y.at(r) = x[r + S];
        x = y;
      }
      Mk.push_back(z);
    }
    od.basis_mult.push_back(Mk);
  }
  od.B = OLattice::from_generators(F, n, Kw, od.embed);
  od.delta_det = det_valuation([&] {
    std::vector<std::vector<TruncSeries>> m(n, std::vector<TruncSeries>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m[i][j] = od.embed[j][i];
    return m;
  }());

  // Values of the basis at the roots, and its inverse over K((w)).
  LMat W(n, std::vector<LSer>(n));
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j) W[j][k] = ls_from_series(eval_at(Ycols[k], j), -E * S);
  LMat Winv = ls_inverse(K, W, R);
  auto mult_from_values = [&](const std::vector<LSer>& xv) {
    OMat Mx;
    for (int k = 0; k < n; ++k) {
      std::vector<LSer> rhs(n);
      for (int j = 0; j < n; ++j) rhs[j] = ls_mul(K, xv[j], W[j][k]);
      OVec col(n);
      for (int i = 0; i < n; ++i) {
        LSer acc = ls_const(0, R);
        for (int j = 0; j < n; ++j) acc = ls_add(K, acc, ls_mul(K, Winv[i][j], rhs[j]));
        col[i] = cx.to_eps(acc, Kw);
      }
      Mx.push_back(col);
    }
    return Mx;
  };

  auto arith_of = br.arith_of_root();
  od.Kf = cx.Kf;
  for (size_t b = 0; b < br.arith.size(); ++b) {
    const ArithBranch& ab = br.arith[b];
    od.e.push_back(ab.e);
    od.f.push_back(ab.f);
    std::vector<int> mine;
    for (int j = 0; j < n; ++j)
      if (arith_of[j] == int(b)) mine.push_back(j);
    std::vector<LSer> idv(n), etav(n);
    for (int j = 0; j < n; ++j) {
      idv[j] = ls_const(arith_of[j] == int(b) ? 1 : 0, R);
      etav[j] = ls_const(1, R);
    }
    const int step = E / ab.e;
    Elt lead = 1;
    if (ab.e == 1) {
      for (int j : mine) {
        etav[j] = LSer{E, std::vector<Elt>(R, 0)};
        etav[j].c[0] = 1;
      }
    } else {
      auto subspace = [&](int upto) {
        FMat rows;
        for (int j : mine)
          for (int r = 0; r < upto; ++r) {
            std::vector<Elt> row(n);
            for (int k = 0; k < n; ++k) row[k] = W[j][k].at(r);
            rows.push_back(row);
          }
        return kernel_basis(K, rows, n);
      };
      FMat U1 = subspace(step);
      bool found = false;
      for (auto& x : U1) {
        std::vector<LSer> v(n);
        for (int j : mine) {
          LSer acc = ls_const(0, R);
          for (int k = 0; k < n; ++k)
            if (x[k]) acc = ls_add(K, acc, ls_mul(K, ls_const(x[k], R), W[j][k]));
          v[j] = acc;
        }
        if (v[mine[0]].val() != step) continue;
        for (int k = 0; k < n; ++k) cx.down(x[k]);
        for (int j : mine) etav[j] = v[j];
        found = true;
        break;
      }
      if (!found) fail(Err::Inconsistent, "no uniformizer found for a ramified branch");
      lead = 1;
      for (int j : mine) lead = K.mul(lead, etav[j].at(step));
    }
    od.eta_norm_lead.push_back(cx.down(lead));
    od.idem.push_back(mult_from_values(idv));
    od.eta.push_back(mult_from_values(etav));
    std::vector<Elt> res(n);
    for (int k = 0; k < n; ++k) res[k] = W[mine[0]][k].at(0);
    od.residue.push_back(res);
  }

  // Conductor: per branch, the least power of the uniformizer landing in B.
  std::vector<OVec> fgens;
  for (int b = 0; b < od.num_branches(); ++b) {
    OMat Mk = od.idem[b];
    int c = 0;
    for (;; ++c) {
      bool inside = true;
      for (auto& col : Mk)
        if (!od.B.contains(col)) {
          inside = false;
          break;
        }
      if (inside) break;
      if (c > Kw * od.e[b]) fail(Err::Inconsistent, "conductor exponent out of range");
      Mk = mat_compose(od.eta[b], Mk);
    }
    od.conductor_exponent.push_back(c);
    for (auto& col : Mk) fgens.push_back(col);
  }
  od.conductor = OLattice::from_generators(F, n, Kw, fgens);
  if (od.conductor.colength() != 2 * dserre)
    fail(Err::Inconsistent, "conductor colength differs from twice delta");

  // Invariants.
  LocalInvariants& inv = an.inv;
  inv.d = d;
  inv.s = br.s();
  const RootDatum& rd = a.rd;
  IntMat tau = rd.permutation_action(br.tau);
  int invr = invariant_rank(rd.rank, {tau});
  inv.c = rd.rank - invr;
  if ((d - inv.c) % 2 != 0) fail(Err::Inconsistent, "d - c is odd");
  inv.delta = (d - inv.c) / 2;
  inv.delta_serre = dserre;
  inv.delta_det = od.delta_det;
  if (inv.delta != dserre || inv.delta != od.delta_det)
    fail(Err::Inconsistent, "delta routes disagree: (d-c)/2=" + std::to_string(inv.delta) +
                                " serre=" + std::to_string(dserre) + " det=" + std::to_string(od.delta_det));
  inv.pi0 = coinvariants(rd.rank, {tau});
  inv.pi0_rank = inv.pi0.free_rank;
  inv.radicial = radicial_valuations(br);
  inv.branches = br.arith;
  return an;
}

LocalInvariants compute_invariants(const LocalChar& a) { return analyze(a).inv; }

long long count_units(const OrderData& ord, const std::vector<OVec>& gens, int k) {
  if (k <= 0) return 1;
  const FqField& F = *ord.F;
  const FqField& K = *ord.Kf;
  const unsigned p = F.p(), m = F.m();
  FieldPtr Fp = FqField::get(p, 1);
  auto emb = K.embedding(F);
  const int n = ord.n;
  // F_p-spanning set of the subring, flattened to F_p digits, with residues.
  FMat span, res;
  for (const auto& g : gens)
    for (int r = 0; r < k; ++r)
      for (unsigned a = 0; a < m; ++a) {
        Elt s = F.from_digits([&] {
          std::vector<unsigned> dg(m, 0);
          dg[a] = 1;
          return dg;
        }());
        std::vector<Elt> flat;
        std::vector<Elt> rv;
        std::vector<Elt> c0(n);
        for (int i = 0; i < n; ++i) {
          // coefficient j of s * e^r * g_i, j < k
          for (int j = 0; j < k; ++j) {
            Elt v = (j - r >= 0 && j - r < g[i].prec()) ? F.mul(s, g[i][j - r]) : 0;
            for (unsigned dgt : F.digits(v)) flat.push_back(dgt);
          }
          c0[i] = r == 0 && g[i].prec() > 0 ? F.mul(s, g[i][0]) : 0;
        }
        for (int b = 0; b < ord.num_branches(); ++b) {
          Elt x = 0;
          for (int i = 0; i < n; ++i)
            if (c0[i]) x = K.add(x, K.mul(emb[c0[i]], ord.residue[b][i]));
          for (unsigned dgt : K.digits(x)) rv.push_back(dgt);
        }
        span.push_back(flat);
        res.push_back(rv);
      }
  int dim = rank_of(*Fp, span);
  FMat rb = res;
  rref(*Fp, rb);
  int r = int(rb.size());
  const int width = int(K.m());
  long long total = 1;
  for (int i = 0; i < r; ++i) total *= p;
  if (total > 20000000) fail(Err::CombinatorialBlowup, "residue image too large to enumerate");
  long long good = 0;
  std::vector<unsigned> coef(r, 0);
  size_t len = rb.empty() ? 0 : rb[0].size();
  for (long long idx = 0; idx < total; ++idx) {
    long long t = idx;
    for (int i = 0; i < r; ++i) {
      coef[i] = unsigned(t % p);
      t /= p;
    }
    std::vector<unsigned> y(len, 0);
    for (int i = 0; i < r; ++i)
      if (coef[i])
        for (size_t j = 0; j < len; ++j) y[j] = (y[j] + coef[i] * rb[i][j]) % p;
    bool ok = true;
    for (int b = 0; b < ord.num_branches() && ok; ++b) {
      bool nz = false;
      for (int j = 0; j < width; ++j) nz |= y[b * width + j] != 0;
      ok = nz;
    }
    good += ok;
  }
  long long ker = 1;
  for (int i = 0; i < dim - r; ++i) ker *= p;
  return ker * good;
}

UnitIndex unit_index(const OrderData& ord) {
  UnitIndex u;
  int delta = ord.delta_serre;
  if (delta == 0) return u;
  int k = 2 * delta;
  std::vector<OVec> full;
  for (int i = 0; i < ord.n; ++i) full.push_back(ovec_unit(ord.F, ord.n, k, i));
  std::vector<OVec> bg;
  for (auto& c : ord.embed) {
    OVec v(ord.n);
    for (int i = 0; i < ord.n; ++i) v[i] = c[i].truncate(k);
    bg.push_back(v);
  }
  long long num = count_units(ord, full, k);
  long long den = count_units(ord, bg, k);
  if (den == 0 || num % den) fail(Err::Inconsistent, "unit group index is not an integer");
  u.index = num / den;
  u.neron_constant = u.index;
  return u;
}

Elt least_nonsquare(const FqField& F) {
  if (F.p() == 2) fail(Err::Unsupported, "no non-squares in characteristic 2");
  for (Elt x = 1; x < F.q(); ++x)
    if (F.pow(x, (F.q() - 1) / 2) != 1) return x;
  fail(Err::Inconsistent, "no non-square found");
}

LocalChar transfer_a(const EndoscopicDatum& ed, const EndoChar& aH) {
  const RootDatum& rd = ed.parent;
  LocalChar out;
  if (aH.kind == "G") {
    if (aH.blocks.size() != 1) fail(Err::Inconsistent, "identity transfer needs one characteristic");
    out = aH.blocks[0];
  } else if (aH.kind == "torus_unramified" || aH.kind == "torus_split") {
    if (rd.n != 2) fail(Err::UnsupportedH, "torus transfer is implemented for rank-one groups");
    const TruncSeries& x = aH.x;
    FieldPtr F = x.field();
    if (x.is_zero()) fail(Err::NotGRegular, "torus coordinate vanishes");
    TruncSeries x2 = x * x;
    if (aH.kind == "torus_unramified") x2 = x2.scale(least_nonsquare(*F));
    out = make_local_char(rd, F, {TruncSeries(F, x.prec()), -x2});
  } else if (aH.kind == "levi") {
    if (aH.blocks.empty()) fail(Err::Inconsistent, "levi transfer needs blocks");
    SeriesPoly prod{TruncSeries::constant(aH.blocks[0].F, 1, aH.blocks[0].prec())};
    for (auto& b : aH.blocks) prod = poly_mul(prod, b.P());
    out = make_local_char(rd, aH.blocks[0].F, a_from_char_poly(prod));
  } else {
    fail(Err::UnsupportedH, "unknown endoscopic characteristic kind '" + aH.kind + "'");
  }
  out.rd = rd;
  try {
    disc_valuation(out.P());
  } catch (const Error& e) {
    if (e.code() == Err::PrecisionExhausted) fail(Err::NotGRegular, "transfer is not G-regular");
    throw;
  }
  return out;
}

int disc_valuation_H(const EndoChar& aH) {
  if (aH.kind == "G") return disc_valuation(aH.blocks.at(0).P());
  if (aH.kind == "levi") {
    int s = 0;
    for (auto& b : aH.blocks) s += disc_valuation(b.P());
    return s;
  }
  return 0;
}

int resultant_valuation_H(const EndoscopicDatum& ed, const EndoChar& aH) {
  LocalChar a = transfer_a(ed, aH);
  int dG = disc_valuation(a.P());
  int dH = disc_valuation_H(aH);
  if ((dG - dH) % 2 != 0 || dG < dH) fail(Err::Inconsistent, "discriminant difference is not twice a resultant");
  return (dG - dH) / 2;
}

bool detect_simple_case(const LocalInvariants& inv, const EndoscopicDatum& ed) {
  if (inv.d != 2 || inv.c != 0) return false;
  const RootDatum& rd = ed.parent;
  for (size_t r = 0; r < inv.radicial.size(); ++r) {
    if (inv.radicial[r].second != Rat(1)) continue;
    auto ij = inv.radicial[r].first;
    for (int a = 0; a < rd.num_roots(); ++a)
      if (rd.root_index[a] == ij && ed.kappa.eval(rd.coroots[a]) != Rat(0)) return true;
  }
  return false;
}

}  // namespace flc
