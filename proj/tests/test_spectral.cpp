#include <functional>
#include <random>

#include "doctest.h"
#include "flc/error.hpp"
#include "flc/spectral.hpp"
#include "helpers.hpp"

using namespace flc;
using th::ser;

namespace {

LocalChar gl(const FieldPtr& F, std::vector<TruncSeries> a) {
  return make_local_char(build_root_datum(Kind::GL, int(a.size()), F->p()), F, a);
}

// Determinant of a matrix over O/e^k is a unit iff it is nonzero mod e.
bool unit_det_mod_e(const FqField& F, std::vector<std::vector<Elt>> M) {
  int n = int(M.size());
  for (int c = 0; c < n; ++c) {
    int r = c;
    while (r < n && !M[r][c]) ++r;
    if (r == n) return false;
    std::swap(M[r], M[c]);
    Elt inv = F.inv(M[c][c]);
    for (int i = c + 1; i < n; ++i) {
      Elt f = F.mul(M[i][c], inv);
      for (int j = c; j < n; ++j) M[i][j] = F.sub(M[i][j], F.mul(f, M[c][j]));
    }
  }
  return true;
}

// Units of B^flat / e^k and of the image of B, by brute force: x is a unit iff
// multiplication by x is invertible, i.e. its matrix is invertible mod e.
std::pair<long long, long long> brute_units(const OrderData& od, int k) {
  const FqField& F = *od.F;
  int n = od.n;
  std::vector<OVec> gens = od.embed;
  for (int i = 0; i < n; ++i) gens.push_back(ovec_shift(ovec_unit(od.F, n, od.K, i), k));
  OLattice Bk = OLattice::from_generators(od.F, n, od.K, gens);
  long long all = 0, inB = 0;
  int slots = n * k;
  std::vector<Elt> x(slots, 0);
  std::function<void(int)> rec = [&](int s) {
    if (s == slots) {
      OVec v = ovec_zero(od.F, n, od.K);
      for (int i = 0; i < n; ++i)
        for (int r = 0; r < k; ++r) v[i].at(r) = x[i * k + r];
      std::vector<std::vector<Elt>> M(n, std::vector<Elt>(n, 0));
      for (int c = 0; c < n; ++c)
        for (int b = 0; b < n; ++b) {
          Elt xb = v[b][0];
          if (!xb) continue;
          for (int r = 0; r < n; ++r) M[r][c] = F.add(M[r][c], F.mul(xb, od.basis_mult[b][c][r][0]));
        }
      if (!unit_det_mod_e(F, M)) return;
      ++all;
      if (Bk.contains(v)) ++inB;
      return;
    }
    for (Elt a = 0; a < F.q(); ++a) {
      x[s] = a;
      rec(s + 1);
    }
  };
  rec(0);
  return {all, inB};
}

std::vector<std::vector<TruncSeries>> rows_of(const OMat& M) {
  int n = int(M.size());
  std::vector<std::vector<TruncSeries>> R(n, std::vector<TruncSeries>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) R[i][j] = M[j][i];
  return R;
}

}  // namespace

TEST_CASE("olattice hermite form and membership") {
  auto F = FqField::get(3, 1);
  int K = 5;
  OVec g1{ser(F, {0, 1}, K), ser(F, {1}, K)};
  OVec g2{ser(F, {0, 0, 1}, K), ser(F, {0}, K)};
  auto L = OLattice::from_generators(F, 2, K, {g1, g2});
  CHECK(L.pivots() == std::vector<int>{2, 0});
  CHECK(L.colength() == 2);
  CHECK(L.contains(ovec_add(g1, g1)));
  CHECK_FALSE(L.contains(ovec_unit(F, 2, K, 0)));
  auto z = L.coords(ovec_add(g1, ovec_shift(g2, 1)));
  CHECK(z[1] == ser(F, {1}, K));
  // same lattice from a different generating set has the same key
  auto L2 = OLattice::from_generators(F, 2, K, {ovec_add(g1, g2), g2});
  CHECK(L == L2);
  CHECK(OLattice::full(F, 2, K).colength() == 0);
}

TEST_CASE("local invariants of small examples") {
  auto F = FqField::get(3, 1);
  int N = 10;
  SUBCASE("unramified nonsplit, depth one") {
    auto an = analyze(gl(F, {ser(F, {0}, N), ser(F, {0, 0, -2}, N)}));
    CHECK(an.inv.d == 2);
    CHECK(an.inv.s == 2);
    CHECK(an.inv.c == 0);
    CHECK(an.inv.delta == 1);
    CHECK(an.inv.pi0_rank == 2);
    CHECK(an.ord.num_branches() == 1);
    CHECK(an.ord.f[0] == 2);
    CHECK(unit_index(an.ord).index == 4);
  }
  SUBCASE("split, depth one") {
    auto an = analyze(gl(F, {ser(F, {0}, N), ser(F, {0, 0, -1}, N)}));
    CHECK(an.inv.d == 2);
    CHECK(an.inv.c == 0);
    CHECK(an.inv.delta == 1);
    CHECK(an.inv.pi0_rank == 2);
    CHECK(an.ord.num_branches() == 2);
    CHECK(unit_index(an.ord).index == 2);
  }
  SUBCASE("smooth ramified") {
    auto an = analyze(gl(F, {ser(F, {0}, N), ser(F, {0, -1}, N)}));
    CHECK(an.inv.d == 1);
    CHECK(an.inv.s == 1);
    CHECK(an.inv.c == 1);
    CHECK(an.inv.delta == 0);
    CHECK(unit_index(an.ord).index == 1);
  }
  SUBCASE("ramified cusp") {
    auto an = analyze(gl(F, {ser(F, {0}, N), ser(F, {0, 0, 0, -1}, N)}));
    CHECK(an.inv.d == 3);
    CHECK(an.inv.c == 1);
    CHECK(an.inv.delta == 1);
    CHECK(an.ord.e[0] == 2);
    CHECK(an.ord.conductor_exponent[0] == 2);
    CHECK(unit_index(an.ord).index == 3);
  }
  SUBCASE("SL_2 uses the coroot lattice") {
    auto rd = build_root_datum(Kind::SL, 2, 3);
    auto an = analyze(make_local_char(rd, F, {ser(F, {0}, N), ser(F, {0, 0, -1}, N)}));
    CHECK(an.inv.c == 0);
    CHECK(an.inv.pi0_rank == 1);
    auto ram = analyze(make_local_char(rd, F, {ser(F, {0}, N), ser(F, {0, -1}, N)}));
    CHECK(ram.inv.c == 1);
    CHECK(ram.inv.pi0.str() == "Z/2");
  }
}

TEST_CASE("companion point has the right characteristic polynomial") {
  auto F = FqField::get(5, 1);
  int N = 8;
  LocalChar a = gl(F, {ser(F, {1, 2}, N), ser(F, {0, 3}, N), ser(F, {4, 0, 1}, N)});
  auto back = a_from_char_poly(char_poly_matrix(companion_point(a)));
  REQUIRE(back.size() == 3);
  for (int i = 0; i < 3; ++i) CHECK(back[i].truncate(N) == a.a[i].truncate(N));
}

TEST_CASE("order data properties on random characteristics") {
  std::mt19937_64 rng(9001);
  int done = 0, brute = 0;
  for (int it = 0; it < 3000 && done < 150; ++it) {
    unsigned p = std::vector<unsigned>{3, 5, 7}[rng() % 3];
    int n = 2 + rng() % 2;
    if (p <= unsigned(n)) continue;
    auto F = FqField::get(p, 1);
    int N = 14;
    SeriesPoly P = th::random_monic(F, n, 4, N, rng);
    for (auto& c : P)
      if (c.prec() && &c != &P.back()) c.at(0) = 0;  // force a singular fiber
    LocalChar a;
    int d;
    try {
      a = gl(F, a_from_char_poly(P));
      d = disc_valuation(P);
    } catch (const Error&) {
      continue;
    }
    if (d > 6 || d == 0) continue;
    Analysis an;
    try {
      an = analyze(a);
    } catch (const Error& e) {
      CHECK(e.code() == Err::WildRamification);
      continue;
    }
    ++done;
    const auto& inv = an.inv;
    const auto& od = an.ord;
    CHECK(inv.delta_serre == inv.delta);
    CHECK(inv.delta_det == inv.delta);
    Rat sum(0);
    for (auto& r : inv.radicial) sum = sum + r.second;
    CHECK(sum == Rat(d));
    CHECK(od.conductor.colength() == 2 * inv.delta);
    CHECK(od.B.colength() == inv.delta);
    // multiplication by t has characteristic polynomial P
    int K = od.K;
    auto cp = char_poly_matrix(rows_of(od.T));
    for (int i = 0; i < n; ++i) CHECK(cp[i].truncate(K) == P[i].truncate(K));
    // idempotents are orthogonal and sum to one
    OMat sum_e = mat_truncate(mat_compose(od.idem[0], mat_identity(F, n, K)), K);
    for (int b = 0; b < od.num_branches(); ++b) {
      CHECK(mat_truncate(mat_compose(od.idem[b], od.idem[b]), K) == mat_truncate(od.idem[b], K));
      if (b > 0)
        for (int j = 0; j < n; ++j) sum_e[j] = ovec_add(sum_e[j], od.idem[b][j]);
    }
    CHECK(sum_e == mat_identity(F, n, K));
    // unit index against brute force when small
    int k = 2 * inv.delta;
    double size = 1;
    for (int i = 0; i < n * k; ++i) size *= p;
    if (k > 0 && size <= 60000) {
      auto [all, inB] = brute_units(od, k);
      REQUIRE(inB > 0);
      CHECK(all % inB == 0);
      CHECK(unit_index(od).index == all / inB);
      ++brute;
    }
  }
  CHECK(done >= 60);
  CHECK(brute >= 10);
}
