#include "flc/series.hpp"

#include <algorithm>
#include <sstream>

#include "flc/error.hpp"

namespace flc {

TruncSeries TruncSeries::constant(FieldPtr F, Elt a, int N) {
  TruncSeries s(std::move(F), N);
  if (N > 0) s.c_[0] = a;
  return s;
}

TruncSeries TruncSeries::monomial(FieldPtr F, Elt a, int k, int N) {
  TruncSeries s(std::move(F), N);
  if (k < N) s.c_[k] = a;
  return s;
}

int TruncSeries::val() const {
  for (int i = 0; i < prec(); ++i)
    if (c_[i]) return i;
  return prec();
}

TruncSeries TruncSeries::operator+(const TruncSeries& o) const {
  int N = std::min(prec(), o.prec());
  TruncSeries r(F_ ? F_ : o.F_, N);
  for (int i = 0; i < N; ++i) r.c_[i] = F_->add(c_[i], o.c_[i]);
  return r;
}

TruncSeries TruncSeries::operator-(const TruncSeries& o) const {
  int N = std::min(prec(), o.prec());
  TruncSeries r(F_ ? F_ : o.F_, N);
  for (int i = 0; i < N; ++i) r.c_[i] = F_->sub(c_[i], o.c_[i]);
  return r;
}

TruncSeries TruncSeries::operator-() const {
  TruncSeries r(F_, prec());
  for (int i = 0; i < prec(); ++i) r.c_[i] = F_->neg(c_[i]);
  return r;
}

TruncSeries TruncSeries::operator*(const TruncSeries& o) const {
  int N = std::min(prec(), o.prec());
  TruncSeries r(F_, N);
  const FqField& F = *F_;
  for (int i = 0; i < N; ++i) {
    if (!c_[i]) continue;
    for (int j = 0; i + j < N; ++j) {
      if (!o.c_[j]) continue;
      r.c_[i + j] = F.add(r.c_[i + j], F.mul(c_[i], o.c_[j]));
    }
  }
  return r;
}

TruncSeries TruncSeries::scale(Elt a) const {
  TruncSeries r(F_, prec());
  for (int i = 0; i < prec(); ++i) r.c_[i] = F_->mul(a, c_[i]);
  return r;
}

TruncSeries TruncSeries::truncate(int N) const {
  TruncSeries r(F_, std::min(N, prec()));
  std::copy(c_.begin(), c_.begin() + r.prec(), r.c_.begin());
  return r;
}

TruncSeries TruncSeries::shift(int k) const {
  TruncSeries r(F_, prec());
  for (int i = 0; i + k < prec(); ++i) r.c_[i + k] = c_[i];
  return r;
}

TruncSeries TruncSeries::unshift(int k) const {
  if (k > prec()) fail(Err::PrecisionExhausted, "unshift beyond precision");
  for (int i = 0; i < k; ++i)
    if (c_[i]) fail(Err::Inconsistent, "unshift of a non-divisible series");
  TruncSeries r(F_, prec() - k);
  for (int i = 0; i < r.prec(); ++i) r.c_[i] = c_[i + k];
  return r;
}

TruncSeries TruncSeries::inverse() const {
  if (!is_unit()) fail(Err::PrecisionExhausted, "inverse of a non-unit series");
  const FqField& F = *F_;
  int N = prec();
  TruncSeries r(F_, N);
  Elt i0 = F.inv(c_[0]);
  r.c_[0] = i0;
  for (int k = 1; k < N; ++k) {
    Elt s = 0;
    for (int j = 1; j <= k; ++j)
      if (c_[j] && r.c_[k - j]) s = F.add(s, F.mul(c_[j], r.c_[k - j]));
    r.c_[k] = F.neg(F.mul(s, i0));
  }
  return r;
}

TruncSeries TruncSeries::inflate(int k) const {
  TruncSeries r(F_, prec() * k);
  for (int i = 0; i < prec(); ++i) r.c_[i * k] = c_[i];
  return r;
}

std::string TruncSeries::str() const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < prec(); ++i) {
    if (!c_[i]) continue;
    if (!first) os << " + ";
    first = false;
    os << c_[i];
    if (i == 1) os << "*e";
    if (i > 1) os << "*e^" << i;
  }
  if (first) os << "0";
  os << " + O(e^" << prec() << ")";
  return os.str();
}

LaurentElt LaurentElt::from_series(const TruncSeries& s) {
  LaurentElt r;
  int v = s.val();
  if (v >= s.prec()) return r;
  r.v = v;
  r.unit = s.unshift(v);
  return r;
}

LaurentElt LaurentElt::operator*(const LaurentElt& o) const {
  if (is_zero() || o.is_zero()) return LaurentElt{};
  return LaurentElt{v + o.v, unit * o.unit};
}

LaurentElt LaurentElt::inverse() const {
  if (is_zero()) fail(Err::Inconsistent, "inverse of zero");
  return LaurentElt{-v, unit.inverse()};
}

SeriesPoly char_poly_from_a(const std::vector<TruncSeries>& a) {
  int n = a.size();
  if (n == 0) throw std::invalid_argument("empty characteristic");
  FieldPtr F = a[0].field();
  int N = a[0].prec();
  for (auto& x : a) N = std::min(N, x.prec());
  SeriesPoly P(n + 1);
  P[n] = TruncSeries::constant(F, 1, N);
  for (int i = 1; i <= n; ++i) P[n - i] = (i % 2) ? -a[i - 1].truncate(N) : a[i - 1].truncate(N);
  return P;
}

std::vector<TruncSeries> a_from_char_poly(const SeriesPoly& P) {
  int n = int(P.size()) - 1;
  std::vector<TruncSeries> a(n);
  for (int i = 1; i <= n; ++i) a[i - 1] = (i % 2) ? -P[n - i] : P[n - i];
  return a;
}

SeriesPoly poly_derivative(const SeriesPoly& P) {
  SeriesPoly D;
  const FqField& F = P[0].F();
  for (size_t i = 1; i < P.size(); ++i) D.push_back(P[i].scale(F.from_int(i)));
  return D;
}

SeriesPoly poly_mul(const SeriesPoly& A, const SeriesPoly& B) {
  int N = INT_MAX;
  for (auto& x : A) N = std::min(N, x.prec());
  for (auto& x : B) N = std::min(N, x.prec());
  SeriesPoly R(A.size() + B.size() - 1, TruncSeries(A[0].field(), N));
  for (size_t i = 0; i < A.size(); ++i)
    for (size_t j = 0; j < B.size(); ++j) R[i + j] = R[i + j] + A[i] * B[j];
  return R;
}

int det_valuation(std::vector<std::vector<TruncSeries>> M) {
  int n = M.size();
  int total = 0;
  for (int k = 0; k < n; ++k) {
    int best = INT_MAX, bi = -1, bj = -1;
    for (int i = k; i < n; ++i)
      for (int j = k; j < n; ++j) {
        int v = M[i][j].val();
        if (v < M[i][j].prec() && v < best) {
          best = v;
          bi = i;
          bj = j;
        }
      }
    if (bi < 0) fail(Err::PrecisionExhausted, "determinant vanishes to working precision");
    std::swap(M[k], M[bi]);
    for (int i = 0; i < n; ++i) std::swap(M[i][k], M[i][bj]);
    total += best;
    TruncSeries pinv = M[k][k].unshift(best).inverse();
    for (int i = k + 1; i < n; ++i) {
      if (M[i][k].is_zero()) continue;
      TruncSeries f = M[i][k].unshift(best) * pinv;
      for (int j = k; j < n; ++j) M[i][j] = M[i][j] - f * M[k][j];
    }
  }
  return total;
}

int resultant_valuation(const SeriesPoly& A, const SeriesPoly& B) {
  int m = int(A.size()) - 1, n = int(B.size()) - 1;
  int N = INT_MAX;
  for (auto& x : A) N = std::min(N, x.prec());
  for (auto& x : B) N = std::min(N, x.prec());
  FieldPtr F = A[0].field();
  int sz = m + n;
  std::vector<std::vector<TruncSeries>> S(sz, std::vector<TruncSeries>(sz, TruncSeries(F, N)));
  for (int r = 0; r < n; ++r)
    for (int i = 0; i <= m; ++i) S[r][r + i] = A[m - i].truncate(N);
  for (int r = 0; r < m; ++r)
    for (int i = 0; i <= n; ++i) S[n + r][r + i] = B[n - i].truncate(N);
  return det_valuation(S);
}

int disc_valuation(const SeriesPoly& P) {
  if (P.size() < 2) throw std::invalid_argument("degree must be positive");
  if (P.size() == 2) return 0;
  return resultant_valuation(P, poly_derivative(P));
}

std::vector<Slope> newton_polygon(const SeriesPoly& P) {
  int n = int(P.size()) - 1;
  std::vector<std::pair<int, int>> pts;
  std::vector<int> unknown;
  for (int i = 0; i <= n; ++i) {
    int v = P[i].val();
    if (v < P[i].prec())
      pts.push_back({i, v});
    else
      unknown.push_back(i);
  }
  if (pts.empty() || pts[0].first != 0)
    fail(Err::PrecisionExhausted, "constant term vanishes to working precision");
  // Lower convex hull.
  std::vector<std::pair<int, int>> hull;
  for (auto& pt : pts) {
    while (hull.size() >= 2) {
      auto [x1, y1] = hull[hull.size() - 2];
      auto [x2, y2] = hull.back();
      // drop middle point if it is on or above segment (x1,y1)-(pt)
      long long cross = (long long)(x2 - x1) * (pt.second - y1) - (long long)(y2 - y1) * (pt.first - x1);
      if (cross <= 0)
        hull.pop_back();
      else
        break;
    }
    hull.push_back(pt);
  }
  // Unknown coefficients (val >= prec) must lie on or above the hull.
  for (int i : unknown) {
    int prec = P[i].prec();
    for (size_t k = 0; k + 1 < hull.size(); ++k) {
      auto [x1, y1] = hull[k];
      auto [x2, y2] = hull[k + 1];
      if (i > x1 && i < x2) {
        Rat yline = Rat(y1) + Rat(y2 - y1, x2 - x1) * (i - x1);
        if (Rat(prec) < yline) fail(Err::PrecisionExhausted, "Newton polygon undetermined at precision");
      }
    }
  }
  std::vector<Slope> out;
  for (size_t k = 0; k + 1 < hull.size(); ++k) {
    auto [x1, y1] = hull[k];
    auto [x2, y2] = hull[k + 1];
    out.push_back({Rat(y1 - y2, x2 - x1), x2 - x1});
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::vector<std::vector<TruncSeries>> companion_point(const std::vector<TruncSeries>& a) {
  SeriesPoly P = char_poly_from_a(a);
  int n = a.size();
  FieldPtr F = a[0].field();
  int N = P[0].prec();
  std::vector<std::vector<TruncSeries>> C(n, std::vector<TruncSeries>(n, TruncSeries(F, N)));
  for (int i = 1; i < n; ++i) C[i][i - 1] = TruncSeries::constant(F, 1, N);
  for (int i = 0; i < n; ++i) C[i][n - 1] = -P[i];
  return C;
}

SeriesPoly char_poly_matrix(const std::vector<std::vector<TruncSeries>>& A) {
  int n = A.size();
  FieldPtr F = A[0][0].field();
  const FqField& Fq = *F;
  int N = INT_MAX;
  for (auto& row : A)
    for (auto& x : row) N = std::min(N, x.prec());
  using Mat = std::vector<std::vector<TruncSeries>>;
  auto zero = TruncSeries(F, N);
  auto one = TruncSeries::constant(F, 1, N);
  Mat Mk(n, std::vector<TruncSeries>(n, zero));
  SeriesPoly c(n + 1, zero);
  c[n] = one;
  for (int k = 1; k <= n; ++k) {
    // M_k = A M_{k-1} + c_{n-k+1} I
    Mat AM(n, std::vector<TruncSeries>(n, zero));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        TruncSeries s = zero;
        for (int l = 0; l < n; ++l) s = s + A[i][l] * Mk[l][j];
        AM[i][j] = s;
      }
    for (int i = 0; i < n; ++i) AM[i][i] = AM[i][i] + c[n - k + 1];
    Mk = AM;
    TruncSeries tr = zero;
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l) tr = tr + A[i][l] * Mk[l][i];
    if (k % int(Fq.p()) == 0) fail(Err::BadCharacteristic, "characteristic divides matrix size");
    c[n - k] = -tr.scale(Fq.inv(Fq.from_int(k)));
  }
  return c;
}

}  // namespace flc
