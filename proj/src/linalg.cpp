#include "flc/linalg.hpp"

#include <functional>

namespace flc {

using Elt = FqField::Elt;

std::vector<int> rref(const FqField& F, FMat& M) {
  std::vector<int> piv;
  if (M.empty()) return piv;
  int rows = int(M.size()), cols = int(M[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int sel = -1;
    for (int i = r; i < rows; ++i)
      if (M[i][c]) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    std::swap(M[r], M[sel]);
    Elt inv = F.inv(M[r][c]);
    for (auto& x : M[r]) x = F.mul(x, inv);
    for (int i = 0; i < rows; ++i) {
      if (i == r || !M[i][c]) continue;
      Elt f = M[i][c];
      for (int j = 0; j < cols; ++j)
        if (M[r][j]) M[i][j] = F.sub(M[i][j], F.mul(f, M[r][j]));
    }
    piv.push_back(c);
    ++r;
  }
  M.resize(r);
  return piv;
}

FMat kernel_basis(const FqField& F, FMat M, int ncols) {
  auto piv = rref(F, M);
  std::vector<int> is_piv(ncols, -1);
  for (size_t i = 0; i < piv.size(); ++i) is_piv[piv[i]] = int(i);
  FMat ker;
  for (int c = 0; c < ncols; ++c) {
    if (is_piv[c] >= 0) continue;
    std::vector<Elt> v(ncols, 0);
    v[c] = 1;
    for (size_t i = 0; i < piv.size(); ++i) v[piv[i]] = F.neg(M[i][c]);
    ker.push_back(v);
  }
  return ker;
}

int rank_of(const FqField& F, FMat M) { return int(rref(F, M).size()); }

std::vector<FMat> all_subspaces(const FqField& K, const std::vector<Elt>& scalars, int n) {
  std::vector<FMat> out;
  out.push_back(FMat{});
  // Choose pivot columns as a bitmask; free entries are those right of the
  // pivot in each row, excluding other pivot columns.
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> piv;
    for (int c = 0; c < n; ++c)
      if (mask >> c & 1) piv.push_back(c);
    std::vector<std::pair<int, int>> slots;
    for (size_t i = 0; i < piv.size(); ++i)
      for (int c = piv[i] + 1; c < n; ++c)
        if (!(mask >> c & 1)) slots.push_back({int(i), c});
    FMat base(piv.size(), std::vector<Elt>(n, 0));
    for (size_t i = 0; i < piv.size(); ++i) base[i][piv[i]] = 1;
    std::function<void(size_t)> rec = [&](size_t s) {
      if (s == slots.size()) {
        out.push_back(base);
        return;
      }
      for (Elt x : scalars) {
        base[slots[s].first][slots[s].second] = x;
        rec(s + 1);
      }
      base[slots[s].first][slots[s].second] = 0;
    };
    rec(0);
  }
  (void)K;
  return out;
}

}  // namespace flc
