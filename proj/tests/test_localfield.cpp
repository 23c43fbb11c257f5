#include <map>
#include <random>

#include "doctest.h"
#include "flc/error.hpp"
#include "flc/puiseux.hpp"
#include "helpers.hpp"

using namespace flc;
using th::ser;

TEST_CASE("canonical moduli are the least irreducibles") {
  // x^2 + 1 is irreducible over F_3 and (1,0) is the least candidate with c_0 != 0.
  CHECK(canonical_modulus(3, 2) == std::vector<unsigned>{1, 0});
  // over F_2: x^2 + x + 1
  CHECK(canonical_modulus(2, 2) == std::vector<unsigned>{1, 1});
  // degree 3 over F_2: (1,0,1) = x^3 + x^2 + 1 precedes (1,1,0) = x^3 + x + 1
  CHECK(canonical_modulus(2, 3) == std::vector<unsigned>{1, 0, 1});
  CHECK(canonical_modulus(5, 1) == std::vector<unsigned>{0});
}

TEST_CASE("field axioms on F_9 and F_49") {
  for (auto [p, m] : {std::pair{3u, 2u}, std::pair{7u, 2u}, std::pair{5u, 3u}}) {
    auto F = FqField::get(p, m);
    std::mt19937 rng(7);
    for (int it = 0; it < 500; ++it) {
      Elt a = rng() % F->q(), b = rng() % F->q(), c = rng() % F->q();
      CHECK(F->mul(a, F->add(b, c)) == F->add(F->mul(a, b), F->mul(a, c)));
      CHECK(F->sub(F->add(a, b), b) == a);
      if (a) CHECK(F->mul(a, F->inv(a)) == 1);
      CHECK(F->pow(a, F->q()) == a);
    }
    CHECK(F->subfield(1).size() == p);
  }
}

TEST_CASE("embedding F_9 into F_729 is a ring map") {
  auto S = FqField::get(3, 2), B = FqField::get(3, 6);
  auto emb = B->embedding(*S);
  for (Elt a = 0; a < 9; ++a)
    for (Elt b = 0; b < 9; ++b) {
      CHECK(emb[S->add(a, b)] == B->add(emb[a], emb[b]));
      CHECK(emb[S->mul(a, b)] == B->mul(emb[a], emb[b]));
    }
}

TEST_CASE("disc_valuation examples") {
  auto F = FqField::get(3, 1);
  int N = 8;
  CHECK(disc_valuation(th::monic(F, {ser(F, {0, -1}, N), ser(F, {0}, N)}, N)) == 1);
  CHECK(disc_valuation(th::monic(F, {ser(F, {0, 0, -2}, N), ser(F, {0}, N)}, N)) == 2);
  CHECK(disc_valuation(th::monic(F, {ser(F, {-1}, N), ser(F, {0}, N)}, N)) == 0);
  CHECK_THROWS_AS(disc_valuation(th::monic(F, {ser(F, {0}, N), ser(F, {0}, N)}, N)), Error);
}

TEST_CASE("newton_polygon examples") {
  auto F = FqField::get(3, 1);
  int N = 8;
  auto np1 = newton_polygon(th::monic(F, {ser(F, {0, -1}, N), ser(F, {0}, N)}, N));
  REQUIRE(np1.size() == 1);
  CHECK(np1[0].slope == Rat(1, 2));
  CHECK(np1[0].multiplicity == 2);
  auto np2 = newton_polygon(th::monic(F, {ser(F, {0, 0, -2}, N), ser(F, {0}, N)}, N));
  CHECK(np2 == std::vector<Slope>{{Rat(1), 2}});
  auto np3 = newton_polygon(th::monic(F, {ser(F, {-1}, N), ser(F, {0}, N)}, N));
  CHECK(np3 == std::vector<Slope>{{Rat(0), 2}});
}

TEST_CASE("factor_tame examples") {
  auto F = FqField::get(3, 1);
  int N = 8;
  auto b1 = factor_tame(th::monic(F, {ser(F, {0, 0, -2}, N), ser(F, {0}, N)}, N));
  REQUIRE(b1.arith.size() == 1);
  CHECK(b1.arith[0].e == 1);
  CHECK(b1.arith[0].f == 2);
  CHECK(b1.s() == 2);
  CHECK(b1.geo_sigma == std::vector<int>{1, 0});
  auto b2 = factor_tame(th::monic(F, {ser(F, {0, -1}, N), ser(F, {0}, N)}, N));
  REQUIRE(b2.arith.size() == 1);
  CHECK(b2.arith[0].e == 2);
  CHECK(b2.arith[0].f == 1);
  CHECK(b2.s() == 1);
  // (t-1)(t-1-e) = t^2 - (2+e) t + (1+e)
  auto b3 = factor_tame(th::monic(F, {ser(F, {1, 1}, N), ser(F, {-2, -1}, N)}, N));
  REQUIRE(b3.arith.size() == 2);
  CHECK(b3.s() == 2);
  CHECK(b3.arith[0].e == 1);
  CHECK(b3.arith[1].f == 1);
  CHECK(b3.geo_sigma == std::vector<int>{0, 1});
}

TEST_CASE("hensel_lift examples") {
  auto F9 = FqField::get(3, 2);
  int N = 8;
  // sqrt(2) in F_9: find u0 with u0^2 = 2.
  Elt u0 = 0;
  for (Elt x = 1; x < 9; ++x)
    if (F9->mul(x, x) == F9->from_int(2)) u0 = x;
  REQUIRE(u0 != 0);
  SeriesPoly P = th::monic(F9, {ser(F9, {0, 0, -2}, N), ser(F9, {0}, N)}, N);
  SeriesPoly G0{TruncSeries::monomial(F9, F9->neg(u0), 1, 2), TruncSeries::constant(F9, 1, 2)};
  SeriesPoly H0{TruncSeries::monomial(F9, u0, 1, 2), TruncSeries::constant(F9, 1, 2)};
  auto [G, H] = hensel_lift(P, G0, H0, 8);
  auto prod = poly_mul(G, H);
  for (int i = 0; i <= 2; ++i) CHECK(prod[i] == P[i]);
  CHECK(G[1] == TruncSeries::constant(F9, 1, 8));

  auto F3 = FqField::get(3, 1);
  SeriesPoly Q = th::monic(F3, {ser(F3, {-1}, N), ser(F3, {0}, N)}, N);
  auto [A, B] = hensel_lift(Q, SeriesPoly{ser(F3, {-1}, 1), ser(F3, {1}, 1)}, SeriesPoly{ser(F3, {1}, 1), ser(F3, {1}, 1)}, 8);
  CHECK(A[0] == ser(F3, {-1}, 8));
  CHECK(B[0] == ser(F3, {1}, 8));

  SeriesPoly T = th::monic(F3, {ser(F3, {0}, N), ser(F3, {0}, N)}, N);
  SeriesPoly tt{ser(F3, {0}, 1), ser(F3, {1}, 1)};
  CHECK_THROWS_AS(hensel_lift(T, tt, tt, 8), Error);
}


TEST_CASE("factor_tame properties on random polynomials") {
  std::mt19937_64 rng(20261017);
  int done = 0;
  for (int it = 0; it < 400 && done < 120; ++it) {
    unsigned p = std::vector<unsigned>{3, 5, 7}[rng() % 3];
    int n = 1 + rng() % 4;
    auto F = FqField::get(p, 1);
    int N = 12;
    SeriesPoly P = th::random_monic(F, n, 3, N, rng);
    if (P[0].is_zero()) continue;
    int d;
    try {
      d = disc_valuation(P);
    } catch (const Error&) {
      continue;
    }
    if (d > 6) continue;
    BranchData bd;
    try {
      bd = factor_tame(P);
    } catch (const Error& e) {
      CHECK(e.code() == Err::WildRamification);
      continue;
    }
    ++done;
    // product of arithmetic factors reproduces P
    SeriesPoly prod{TruncSeries::constant(F, 1, N)};
    for (auto& f : bd.factors) prod = poly_mul(prod, f);
    REQUIRE(prod.size() == P.size());
    for (int i = 0; i <= n; ++i) {
      int Nc = std::min(prod[i].prec(), N);
      CHECK(prod[i].truncate(Nc) == P[i].truncate(Nc));
    }
    // disc valuation from pairwise root distances (ordered pairs)
    int sum = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) sum += (bd.roots[i] - bd.roots[j]).val();
    CHECK(sum == d * bd.E);
    // Newton slopes are the root valuations
    std::map<Rat, int> from_roots, from_np;
    for (auto& r : bd.roots) from_roots[Rat(r.val(), bd.E)]++;
    for (auto& s : newton_polygon(P)) from_np[s.slope] += s.multiplicity;
    CHECK(from_roots == from_np);
    int ef = 0;
    for (auto& a : bd.arith) ef += a.e * a.f;
    CHECK(ef == n);
    // determinism
    BranchData again = factor_tame(P);
    CHECK(again.roots == bd.roots);
  }
  CHECK(done >= 100);
}
