#include "flc/puiseux.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

#include "flc/error.hpp"

namespace flc {

namespace {

struct NeedsExtension {};

std::vector<std::pair<Elt, int>> residual_roots(const FqField& K, std::vector<Elt> r) {
  std::vector<std::pair<Elt, int>> out;
  while (!r.empty() && r.back() == 0) r.pop_back();
  int deg = int(r.size()) - 1;
  auto eval = [&](const std::vector<Elt>& c, Elt x) {
    Elt acc = 0;
    for (int i = int(c.size()) - 1; i >= 0; --i) acc = K.add(K.mul(acc, x), c[i]);
    return acc;
  };
  int found = 0;
  for (uint64_t xi = 1; xi < K.q() && found < deg; ++xi) {
    Elt x = Elt(xi);
    if (eval(r, x) != 0) continue;
    int mult = 0;
    std::vector<Elt> c = r;
    while (c.size() > 1 && eval(c, x) == 0) {
      // synthetic division by (z - x)
      std::vector<Elt> qd(c.size() - 1);
      Elt carry = 0;
      for (int i = int(c.size()) - 1; i >= 1; --i) {
        carry = K.add(c[i], K.mul(carry, x));
        qd[i - 1] = carry;
      }
      c = qd;
      ++mult;
    }
    out.push_back({x, mult});
    found += mult;
  }
  if (found < deg) throw NeedsExtension{};
  return out;
}

SeriesPoly poly_deriv_K(const SeriesPoly& h) {
  SeriesPoly d;
  for (size_t i = 1; i < h.size(); ++i) d.push_back(h[i].scale(h[i].F().from_int(i)));
  return d;
}

TruncSeries newton_simple(const SeriesPoly& h) {
  const FieldPtr& K = h[0].field();
  int N = INT_MAX;
  for (auto& c : h) N = std::min(N, c.prec());
  SeriesPoly hd = poly_deriv_K(h);
  TruncSeries u(K, N);
  for (int it = 0; it < 4 * N + 8; ++it) {
    TruncSeries v = poly_eval(h, u);
    TruncSeries dv = poly_eval(hd, u);
    if (!dv.is_unit()) fail(Err::PrecisionExhausted, "derivative not a unit in Newton step");
    TruncSeries nu = u - v * dv.inverse();
    if (nu == u) return u;
    u = nu;
  }
  fail(Err::PrecisionExhausted, "Newton iteration did not stabilize");
}

// Roots u with val(u) >= 0 of h whose Newton polygon part lies over [0, mu];
// h_mu is a unit and (for recursive calls) h_i, i < mu, are non-units.
void np_roots(const SeriesPoly& h, int mu, std::vector<TruncSeries>& out) {
  if (mu == 0) return;
  const FieldPtr& Kp = h[0].field();
  const FqField& K = *Kp;
  if (mu == 1 && !h[0].is_unit()) {
    out.push_back(newton_simple(h));
    return;
  }
  if (h[0].is_zero()) {
    // u = 0 is a root to the known precision; deflate it.
    SeriesPoly hd(h.begin() + 1, h.end());
    int v1 = hd[0].val();
    if (v1 >= hd[0].prec()) fail(Err::PrecisionExhausted, "repeated root at working precision");
    int pr = h[0].prec() - v1;
    if (pr <= 0) fail(Err::PrecisionExhausted, "root precision exhausted");
    out.push_back(TruncSeries(Kp, pr));
    np_roots(hd, mu - 1, out);
    return;
  }
  std::vector<std::pair<int, int>> pts;
  std::vector<int> unknown;
  for (int i = 0; i <= mu; ++i) {
    int v = h[i].val();
    if (v < h[i].prec())
      pts.push_back({i, v});
    else
      unknown.push_back(i);
  }
  if (pts.empty() || pts[0].first != 0) fail(Err::PrecisionExhausted, "root cluster unresolved at precision");
  std::vector<std::pair<int, int>> hull;
  for (auto& pt : pts) {
    while (hull.size() >= 2) {
      auto [x1, y1] = hull[hull.size() - 2];
      auto [x2, y2] = hull.back();
      long long cross = (long long)(x2 - x1) * (pt.second - y1) - (long long)(y2 - y1) * (pt.first - x1);
      if (cross <= 0)
        hull.pop_back();
      else
        break;
    }
    hull.push_back(pt);
  }
  for (int i : unknown)
    for (size_t k = 0; k + 1 < hull.size(); ++k) {
      auto [x1, y1] = hull[k];
      auto [x2, y2] = hull[k + 1];
      if (i > x1 && i < x2 && Rat(h[i].prec()) < Rat(y1) + Rat(y2 - y1, x2 - x1) * (i - x1))
        fail(Err::PrecisionExhausted, "Newton polygon undetermined at precision");
    }
  for (size_t k = 0; k + 1 < hull.size(); ++k) {
    auto [x1, y1] = hull[k];
    auto [x2, y2] = hull[k + 1];
    if ((y1 - y2) % (x2 - x1) != 0) fail(Err::WildRamification, "non-integral slope: ramification divisible by p");
    int s = (y1 - y2) / (x2 - x1);
    std::vector<Elt> R(x2 - x1 + 1, 0);
    for (int i = x1; i <= x2; ++i) {
      int v = h[i].val();
      if (v < h[i].prec() && v == y1 - s * (i - x1)) R[i - x1] = h[i][v];
    }
    int m = y1 + s * x1;
    for (auto [z0, mult] : residual_roots(K, R)) {
      // h'(u) = h(w^s (z0 + u)) / w^m
      int deg = int(h.size()) - 1;
      int N = INT_MAX;
      for (auto& c : h) N = std::min(N, c.prec());
      SeriesPoly hn(deg + 1, TruncSeries(Kp, N));
      std::vector<Elt> pw{1};  // (z0 + u)^i
      for (int i = 0; i <= deg; ++i) {
        TruncSeries hs = h[i].truncate(N).shift(s * i);
        for (int j = 0; j <= i; ++j)
          if (pw[j]) hn[j] = hn[j] + hs.scale(pw[j]);
        std::vector<Elt> np(pw.size() + 1, 0);
        for (size_t j = 0; j < pw.size(); ++j) {
          np[j] = K.add(np[j], K.mul(pw[j], z0));
          np[j + 1] = K.add(np[j + 1], pw[j]);
        }
        pw = np;
      }
      if (m >= N) fail(Err::PrecisionExhausted, "precision exhausted in Puiseux substitution");
      for (auto& c : hn) c = c.unshift(m);
      std::vector<TruncSeries> sub;
      np_roots(hn, mult, sub);
      for (auto& u : sub) {
        TruncSeries base = TruncSeries::constant(Kp, z0, u.prec());
        out.push_back((base + u).shift(s));
      }
    }
  }
}

int lcm_tame(int n, unsigned p) {
  int E = 1;
  for (int k = 1; k <= n; ++k)
    if (k % int(p)) E = std::lcm(E, k);
  return E;
}

std::vector<Elt> key_of(const TruncSeries& s) { return s.coeffs(); }

}  // namespace

TruncSeries poly_eval(const SeriesPoly& P, const TruncSeries& x) {
  TruncSeries acc(x.field(), x.prec());
  for (int i = int(P.size()) - 1; i >= 0; --i) acc = acc * x + P[i];
  return acc;
}

SeriesPoly lift_to_roots_ring(const SeriesPoly& P, const FieldPtr& K, const std::vector<Elt>& embed, int E) {
  int N = INT_MAX;
  for (auto& c : P) N = std::min(N, c.prec());
  SeriesPoly out;
  for (auto& c : P) {
    TruncSeries t(K, E * N);
    for (int i = 0; i < N; ++i) t.at(i * E) = embed[c[i]];
    out.push_back(t);
  }
  return out;
}

std::vector<int> BranchData::arith_of_root() const {
  std::vector<int> out(roots.size(), -1);
  for (size_t a = 0; a < arith.size(); ++a)
    for (int g : arith[a].geometric)
      for (int r : geometric[g]) out[r] = int(a);
  return out;
}

BranchData factor_tame(const SeriesPoly& Pin, int target_prec_eps) {
  FieldPtr base = Pin[0].field();
  const unsigned p = base->p(), m = base->m();
  const uint64_t qbase = base->q();
  int n = int(Pin.size()) - 1;
  if (n < 1) throw std::invalid_argument("degree must be positive");
  int d = disc_valuation(Pin);
  int target = target_prec_eps > 0 ? target_prec_eps : d + 4;
  int E0 = lcm_tame(n, p);
  int Rt = E0 * target;
  // Pad input: the truncated coefficients are taken as exact.
  int Nin = 2 * target + 2 * d + 8;
  for (auto& c : Pin) Nin = std::max(Nin, c.prec());
  const SeriesPoly& P = Pin;

  for (unsigned L = 1; L <= 24; ++L) {
    uint64_t Q = 1;
    for (unsigned i = 0; i < m * L; ++i) Q *= p;
    if (Q > (uint64_t(1) << 22)) break;
    FieldPtr K = FqField::get(p, m * L);
    std::vector<Elt> emb = K->embedding(*base);
    std::vector<TruncSeries> roots;
    bool split = true;
    int Nwork = Nin;
    for (int attempt = 0; attempt < 6; ++attempt, Nwork *= 2) {
      SeriesPoly Pw;
      for (auto& c : P) {
        TruncSeries t(base, Nwork);
        for (int i = 0; i < std::min(Nwork, c.prec()); ++i) t.at(i) = c[i];
        Pw.push_back(t);
      }
      SeriesPoly h = lift_to_roots_ring(Pw, K, emb, E0);
      roots.clear();
      try {
        np_roots(h, n, roots);
      } catch (const NeedsExtension&) {
        split = false;
        break;
      } catch (const Error& e) {
        if (e.code() == Err::PrecisionExhausted) continue;
        throw;
      }
      if (int(roots.size()) != n) fail(Err::Inconsistent, "root count mismatch");
      int pr = INT_MAX;
      for (auto& r : roots) pr = std::min(pr, r.prec());
      int sep = 0;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) sep = std::max(sep, (roots[i] - roots[j]).val());
      if (pr >= Rt && sep < pr) break;
      roots.clear();
    }
    if (!split) continue;
    if (roots.empty()) fail(Err::PrecisionExhausted, "roots not resolved within the retry budget");
    int pr = INT_MAX;
    for (auto& r : roots) pr = std::min(pr, r.prec());
    for (auto& r : roots) r = r.truncate(pr);
    // Ramification of each root from its exponent support.
    int Eact = 1;
    std::vector<int> eroot(n);
    for (int i = 0; i < n; ++i) {
      int g = E0;
      for (int k = 0; k < pr; ++k)
        if (roots[i][k]) g = std::gcd(g, k);
      eroot[i] = E0 / g;
      Eact = std::lcm(Eact, eroot[i]);
    }
    Elt zeta = K->root_of_unity(Eact);
    if (!zeta) continue;
    int sep = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) sep = std::max(sep, (roots[i] - roots[j]).val());
    auto match = [&](const TruncSeries& x) {
      int hit = -1;
      for (int j = 0; j < n; ++j)
        if ((x - roots[j]).val() > sep) {
          if (hit >= 0) fail(Err::PrecisionExhausted, "ambiguous root match");
          hit = j;
        }
      if (hit < 0) fail(Err::Inconsistent, "Galois image is not a root");
      return hit;
    };
    const int step = E0 / Eact;
    std::vector<int> tau(n), sigma(n);
    for (int i = 0; i < n; ++i) {
      TruncSeries t(K, pr), s(K, pr);
      for (int k = 0; k < pr; ++k) {
        Elt c = roots[i][k];
        if (!c) continue;
        t.at(k) = K->mul(c, K->pow(zeta, k / step));
        s.at(k) = K->pow(c, qbase);
      }
      tau[i] = match(t);
      sigma[i] = match(s);
    }
    // Orbits.
    auto orbit = [&](int start, const std::vector<int>& perm) {
      std::vector<int> o{start};
      for (int x = perm[start]; x != start; x = perm[x]) o.push_back(x);
      return o;
    };
    std::vector<int> seen(n, 0);
    struct Raw {
      std::vector<std::vector<int>> geos;
      int e, f;
      Rat slope;
      std::vector<Elt> key;
    };
    std::vector<Raw> raws;
    for (int i0 = 0; i0 < n; ++i0) {
      if (seen[i0]) continue;
      // arithmetic orbit under <tau, sigma>
      std::vector<int> comp{i0};
      seen[i0] = 1;
      for (size_t k = 0; k < comp.size(); ++k)
        for (int nb : {tau[comp[k]], sigma[comp[k]]})
          if (!seen[nb]) {
            seen[nb] = 1;
            comp.push_back(nb);
          }
      int first = comp[0];
      for (int x : comp)
        if (key_of(roots[x]) < key_of(roots[first])) first = x;
      Raw r;
      int cur = first;
      std::vector<int> used(n, 0);
      while (true) {
        auto g = orbit(cur, tau);
        if (used[g[0]]) break;
        for (int x : g) used[x] = 1;
        r.geos.push_back(g);
        cur = sigma[g[0]];
      }
      r.e = int(r.geos[0].size());
      r.f = int(r.geos.size());
      if (r.e * r.f != int(comp.size())) fail(Err::Inconsistent, "branch orbit structure");
      if (r.e != eroot[first]) fail(Err::Inconsistent, "ramification index mismatch");
      if (r.e % int(p) == 0) fail(Err::WildRamification, "ramification index divisible by p");
      int v = roots[first].val();
      r.slope = Rat(v, E0);
      r.key = key_of(roots[first]);
      raws.push_back(r);
    }
    std::sort(raws.begin(), raws.end(), [](const Raw& a, const Raw& b) {
      if (a.e != b.e) return a.e < b.e;
      if (a.slope != b.slope) return a.slope < b.slope;
      return a.key < b.key;
    });
    BranchData bd;
    bd.base = base;
    bd.K = K;
    bd.L = L;
    bd.E = E0;
    bd.embed = emb;
    bd.root_prec = pr;
    std::vector<int> newidx(n);
    for (auto& r : raws) {
      ArithBranch ab;
      ab.e = r.e;
      ab.f = r.f;
      ab.slope = r.slope;
      for (auto& g : r.geos) {
        std::vector<int> gi;
        for (int x : g) {
          newidx[x] = int(bd.roots.size());
          gi.push_back(int(bd.roots.size()));
          bd.roots.push_back(roots[x]);
        }
        ab.geometric.push_back(int(bd.geometric.size()));
        bd.geometric.push_back(gi);
      }
      bd.arith.push_back(ab);
    }
    bd.tau.assign(n, 0);
    bd.sigma.assign(n, 0);
    for (int i = 0; i < n; ++i) {
      bd.tau[newidx[i]] = newidx[tau[i]];
      bd.sigma[newidx[i]] = newidx[sigma[i]];
    }
    std::vector<int> geo_of(n);
    for (size_t g = 0; g < bd.geometric.size(); ++g)
      for (int x : bd.geometric[g]) geo_of[x] = int(g);
    for (size_t g = 0; g < bd.geometric.size(); ++g) bd.geo_sigma.push_back(geo_of[bd.sigma[bd.geometric[g][0]]]);
    // Arithmetic factors, descended to F_q[[e]].
    std::unordered_map<Elt, Elt> back;
    for (Elt a = 0; a < emb.size(); ++a) back[emb[a]] = a;
    int Neps = (pr + E0 - 1) / E0;
    for (auto& ab : bd.arith) {
      SeriesPoly f{TruncSeries::constant(K, 1, pr)};
      for (int g : ab.geometric)
        for (int x : bd.geometric[g]) f = poly_mul(f, SeriesPoly{-bd.roots[x], TruncSeries::constant(K, 1, pr)});
      SeriesPoly fd;
      for (auto& c : f) {
        TruncSeries t(base, Neps);
        for (int k = 0; k < pr; ++k) {
          Elt v = c[k];
          if (!v) continue;
          auto it = back.find(v);
          if (k % E0 || it == back.end()) fail(Err::Inconsistent, "factor does not descend to the base field");
          t.at(k / E0) = it->second;
        }
        fd.push_back(t);
      }
      bd.factors.push_back(fd);
    }
    return bd;
  }
  fail(Err::Unsupported, "no splitting field within size limits");
}

namespace {

// Division with remainder by a monic polynomial over series.
std::pair<SeriesPoly, SeriesPoly> divmod_monic(SeriesPoly A, const SeriesPoly& B) {
  int db = int(B.size()) - 1;
  FieldPtr F = B[0].field();
  int N = INT_MAX;
  for (auto& c : A) N = std::min(N, c.prec());
  for (auto& c : B) N = std::min(N, c.prec());
  if (int(A.size()) - 1 < db) {
    for (auto& c : A) c = c.truncate(N);
    return {SeriesPoly{TruncSeries(F, N)}, A};
  }
  SeriesPoly Q(A.size() - db, TruncSeries(F, N));
  for (int i = int(A.size()) - 1; i >= db; --i) {
    TruncSeries c = A[i].truncate(N);
    Q[i - db] = c;
    for (int j = 0; j <= db; ++j) A[i - db + j] = A[i - db + j] - c * B[j];
  }
  A.resize(db > 0 ? db : 1);
  if (db == 0) A[0] = TruncSeries(F, N);
  for (auto& c : A) c = c.truncate(N);
  return {Q, A};
}

SeriesPoly padd(const SeriesPoly& A, const SeriesPoly& B) {
  size_t n = std::max(A.size(), B.size());
  int N = INT_MAX;
  for (auto& c : A) N = std::min(N, c.prec());
  for (auto& c : B) N = std::min(N, c.prec());
  FieldPtr F = A[0].field();
  SeriesPoly R(n, TruncSeries(F, N));
  for (size_t i = 0; i < n; ++i) {
    if (i < A.size()) R[i] = R[i] + A[i];
    if (i < B.size()) R[i] = R[i] + B[i];
  }
  return R;
}

SeriesPoly pneg(const SeriesPoly& A) {
  SeriesPoly R;
  for (auto& c : A) R.push_back(-c);
  return R;
}

SeriesPoly with_prec(const SeriesPoly& A, int N) {
  SeriesPoly R;
  for (auto& c : A) {
    TruncSeries t(c.field(), N);
    for (int i = 0; i < std::min(N, c.prec()); ++i) t.at(i) = c[i];
    R.push_back(t);
  }
  return R;
}

// Extended gcd over the residue field: s*g + t*h = 1.
bool residue_bezout(const FqField& K, std::vector<Elt> g, std::vector<Elt> h, std::vector<Elt>& s,
                    std::vector<Elt>& t) {
  auto trim = [](std::vector<Elt>& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
  };
  auto sub = [&](const std::vector<Elt>& a, const std::vector<Elt>& b) {
    std::vector<Elt> r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i)
      r[i] = K.sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
    trim(r);
    return r;
  };
  auto mul = [&](const std::vector<Elt>& a, const std::vector<Elt>& b) {
    if (a.empty() || b.empty()) return std::vector<Elt>{};
    std::vector<Elt> r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
      for (size_t j = 0; j < b.size(); ++j) r[i + j] = K.add(r[i + j], K.mul(a[i], b[j]));
    trim(r);
    return r;
  };
  trim(g);
  trim(h);
  std::vector<Elt> r0 = g, r1 = h, s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    std::vector<Elt> q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 1, 0), r = r0;
    Elt li = K.inv(r1.back());
    while (r.size() >= r1.size() && !r.empty()) {
      size_t sh = r.size() - r1.size();
      Elt c = K.mul(r.back(), li);
      q[sh] = c;
      for (size_t i = 0; i < r1.size(); ++i) r[sh + i] = K.sub(r[sh + i], K.mul(c, r1[i]));
      trim(r);
    }
    trim(q);
    auto s2 = sub(s0, mul(q, s1));
    auto t2 = sub(t0, mul(q, t1));
    r0 = r1;
    r1 = r;
    s0 = s1;
    s1 = s2;
    t0 = t1;
    t1 = t2;
  }
  if (r0.size() != 1) return false;
  Elt ci = K.inv(r0[0]);
  s.clear();
  t.clear();
  for (Elt x : s0) s.push_back(K.mul(x, ci));
  for (Elt x : t0) t.push_back(K.mul(x, ci));
  return true;
}

std::pair<SeriesPoly, SeriesPoly> hensel_core(const SeriesPoly& P, SeriesPoly g, SeriesPoly h, int target) {
  const size_t G0size = g.size();
  const FieldPtr& F = P[0].field();
  const FqField& K = *F;
  std::vector<Elt> g0, h0, s0, t0;
  for (auto& c : g) g0.push_back(c[0]);
  for (auto& c : h) h0.push_back(c[0]);
  if (!residue_bezout(K, g0, h0, s0, t0)) fail(Err::NotCoprime, "factors not coprime modulo e");
  auto lift = [&](const std::vector<Elt>& v) {
    SeriesPoly r;
    for (Elt x : v) r.push_back(TruncSeries::constant(F, x, target));
    if (r.empty()) r.push_back(TruncSeries(F, target));
    return r;
  };
  SeriesPoly s = lift(s0), t = lift(t0);
  SeriesPoly f = with_prec(P, target);
  g = with_prec(g, target);
  h = with_prec(h, target);
  // Make g monic of the right degree: g is monic by precondition.
  auto one = SeriesPoly{TruncSeries::constant(F, 1, target)};
  // Quadratic lifting with g monic: s*g + t*h = 1 is lifted alongside.
  for (int k = 1;; k *= 2) {
    SeriesPoly e = padd(f, pneg(poly_mul(g, h)));
    auto [qq, rr] = divmod_monic(poly_mul(t, e), g);
    SeriesPoly hn = padd(padd(h, poly_mul(s, e)), poly_mul(qq, h));
    SeriesPoly gn = padd(g, rr);
    SeriesPoly b = padd(padd(poly_mul(t, hn), poly_mul(s, gn)), pneg(one));
    auto [c, dd] = divmod_monic(poly_mul(t, b), gn);
    t = padd(t, pneg(dd));
    s = padd(padd(s, pneg(poly_mul(s, b))), pneg(poly_mul(c, hn)));
    g = gn;
    h = hn;
    if (k >= target) break;
  }
  // trim degrees
  size_t dh = P.size() - g.size() + 1;
  g.resize(G0size, TruncSeries(F, target));
  h.resize(dh, TruncSeries(F, target));
  return {g, h};
}

}  // namespace

std::pair<SeriesPoly, SeriesPoly> hensel_lift(const SeriesPoly& P, const SeriesPoly& G0, const SeriesPoly& H0,
                                              int target) {
  const FqField& K = P[0].F();
  std::vector<Elt> g0, h0, s0, t0;
  for (auto& c : G0) g0.push_back(c[0]);
  for (auto& c : H0) h0.push_back(c[0]);
  if (residue_bezout(K, g0, h0, s0, t0)) return hensel_core(P, G0, H0, target);
  // Single-slope rescaling t = e^s u.
  auto np = newton_polygon(P);
  if (np.size() != 1 || np[0].slope.denominator() != 1 || np[0].slope <= 0)
    fail(Err::NotCoprime, "factors not coprime modulo e");
  int s = int(np[0].slope.numerator());
  auto rescale_down = [&](const SeriesPoly& A) {
    int deg = int(A.size()) - 1;
    SeriesPoly R;
    for (int i = 0; i <= deg; ++i) R.push_back(A[i].unshift(s * (deg - i)));
    return R;
  };
  auto rescale_up = [&](const SeriesPoly& A, int N) {
    int deg = int(A.size()) - 1;
    SeriesPoly R;
    for (int i = 0; i <= deg; ++i) {
      TruncSeries t(A[i].field(), N);
      for (int k = 0; k < A[i].prec() && k + s * (deg - i) < N; ++k) t.at(k + s * (deg - i)) = A[i][k];
      R.push_back(t);
    }
    return R;
  };
  SeriesPoly Pr = rescale_down(P), Gr = rescale_down(G0), Hr = rescale_down(H0);
  g0.clear();
  h0.clear();
  for (auto& c : Gr) g0.push_back(c[0]);
  for (auto& c : Hr) h0.push_back(c[0]);
  if (!residue_bezout(K, g0, h0, s0, t0)) fail(Err::NotCoprime, "factors not coprime after rescaling");
  int inner = std::min(target, Pr[0].prec());
  for (auto& c : Pr) inner = std::min(inner, c.prec());
  auto [g, h] = hensel_core(Pr, Gr, Hr, inner);
  return {rescale_up(g, target), rescale_up(h, target)};
}

}  // namespace flc
