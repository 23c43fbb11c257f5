#include "flc/olattice.hpp"

#include "flc/error.hpp"

namespace flc {

OVec ovec_zero(const FieldPtr& F, int n, int K) { return OVec(n, TruncSeries(F, K)); }

OVec ovec_unit(const FieldPtr& F, int n, int K, int i) {
  OVec v = ovec_zero(F, n, K);
  if (K > 0) v[i].at(0) = 1;
  return v;
}

OVec ovec_add(const OVec& a, const OVec& b) {
  OVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

OVec ovec_sub(const OVec& a, const OVec& b) {
  OVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

OVec ovec_scale(const OVec& a, const TruncSeries& s) {
  OVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
  return r;
}

OVec ovec_shift(const OVec& a, int k) {
  OVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i].shift(k);
  return r;
}

OVec mat_apply(const OMat& M, const OVec& v) {
  OVec r = ovec_zero(v[0].field(), int(M.empty() ? 0 : M[0].size()), v[0].prec());
  for (size_t j = 0; j < M.size(); ++j) {
    if (v[j].is_zero()) continue;
    for (size_t i = 0; i < r.size(); ++i) r[i] = r[i] + M[j][i] * v[j];
  }
  return r;
}

OMat mat_compose(const OMat& A, const OMat& B) {
  OMat C;
  for (const auto& col : B) C.push_back(mat_apply(A, col));
  return C;
}

OMat mat_identity(const FieldPtr& F, int n, int K) {
  OMat I;
  for (int j = 0; j < n; ++j) I.push_back(ovec_unit(F, n, K, j));
  return I;
}

OMat mat_truncate(const OMat& M, int K) {
  OMat R = M;
  for (auto& c : R)
    for (auto& x : c) x = x.truncate(K);
  return R;
}

bool ovec_is_zero(const OVec& v) {
  for (auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

namespace {

// Coefficients of s from degree k upwards, as a series of precision K.
TruncSeries high_part(const TruncSeries& s, int k, int K) {
  TruncSeries r(s.field(), K);
  for (int i = k; i < s.prec(); ++i) r.at(i - k) = s[i];
  return r;
}

TruncSeries pad(const TruncSeries& s, int K) {
  TruncSeries r(s.field(), K);
  for (int i = 0; i < std::min(K, s.prec()); ++i) r.at(i) = s[i];
  return r;
}

}  // namespace

OLattice OLattice::from_generators(const FieldPtr& F, int n, int K, const std::vector<OVec>& gens) {
  OLattice L;
  L.F_ = F;
  L.n_ = n;
  L.K_ = K;
  L.piv_.assign(n, K);
  L.cols_.assign(n, ovec_zero(F, n, K));
  std::vector<OVec> pool;
  for (const auto& g : gens) {
    OVec h(n);
    for (int i = 0; i < n; ++i) h[i] = pad(g[i], K);
    if (!ovec_is_zero(h)) pool.push_back(h);
  }
  for (int i = n - 1; i >= 0; --i) {
    int best = -1, bv = K;
    for (size_t g = 0; g < pool.size(); ++g) {
      int v = pool[g][i].val();
      if (v < bv) {
        bv = v;
        best = int(g);
      }
    }
    if (best < 0) continue;
    OVec col = pool[best];
    pool.erase(pool.begin() + best);
    TruncSeries u = high_part(col[i], bv, K - bv);
    TruncSeries w = pad(u.inverse(), K);
    col = ovec_scale(col, w);
    col[i] = TruncSeries::monomial(F, 1, bv, K);
    for (auto& h : pool) {
      if (h[i].is_zero()) continue;
      TruncSeries c = high_part(h[i], bv, K);
      h = ovec_sub(h, ovec_scale(col, c));
      h[i] = TruncSeries(F, K);
    }
    std::vector<OVec> keep;
    for (auto& h : pool)
      if (!ovec_is_zero(h)) keep.push_back(h);
    pool.swap(keep);
    L.piv_[i] = bv;
    L.cols_[i] = col;
  }
  for (int j = 0; j < n; ++j)
    for (int i = j - 1; i >= 0; --i) {
      if (L.piv_[i] >= K) continue;
      TruncSeries c = high_part(L.cols_[j][i], L.piv_[i], K);
      if (c.is_zero()) continue;
      L.cols_[j] = ovec_sub(L.cols_[j], ovec_scale(L.cols_[i], c));
    }
  return L;
}

OLattice OLattice::full(const FieldPtr& F, int n, int K) {
  std::vector<OVec> g;
  for (int i = 0; i < n; ++i) g.push_back(ovec_unit(F, n, K, i));
  return from_generators(F, n, K, g);
}

int OLattice::colength() const {
  int s = 0;
  for (int k : piv_) s += k;
  return s;
}

OVec OLattice::reduce(const OVec& v0) const {
  OVec v(n_);
  for (int i = 0; i < n_; ++i) v[i] = pad(v0[i], K_);
  for (int j = n_ - 1; j >= 0; --j) {
    if (piv_[j] >= K_) continue;
    TruncSeries c = high_part(v[j], piv_[j], K_);
    if (c.is_zero()) continue;
    v = ovec_sub(v, ovec_scale(cols_[j], c));
  }
  return v;
}

bool OLattice::contains(const OLattice& o) const {
  for (const auto& c : o.cols_)
    if (!contains(c)) return false;
  return true;
}

std::vector<TruncSeries> OLattice::coords(const OVec& v0) const {
  OVec v(n_);
  for (int i = 0; i < n_; ++i) v[i] = pad(v0[i], K_);
  std::vector<TruncSeries> z(n_, TruncSeries(F_, K_));
  for (int j = n_ - 1; j >= 0; --j) {
    if (piv_[j] >= K_) continue;
    if (v[j].val() < piv_[j]) fail(Err::Inconsistent, "vector is not in the lattice");
    z[j] = high_part(v[j], piv_[j], K_);
    v = ovec_sub(v, ovec_scale(cols_[j], z[j]));
  }
  return z;
}

std::vector<uint32_t> OLattice::key() const {
  std::vector<uint32_t> k{uint32_t(n_), uint32_t(K_)};
  for (int p : piv_) k.push_back(uint32_t(p));
  for (int j = 0; j < n_; ++j)
    for (int i = 0; i < j; ++i)
      for (int r = 0; r < std::min(piv_[i], K_); ++r) k.push_back(cols_[j][i][r]);
  return k;
}

}  // namespace flc
