#pragma once

#include <utility>
#include <vector>

#include "flc/series.hpp"

namespace flc {

// Roots live in K[[w]] with w^E = e, K = F_{q^L} chosen large enough to split
// every residual polynomial and contain the needed roots of unity.
struct ArithBranch {
  int e = 1;
  int f = 1;
  Rat slope;                  // valuation (in e-units) of the roots
  std::vector<int> geometric; // indices into BranchData::geometric
};

struct BranchData {
  FieldPtr base;   // F_q
  FieldPtr K;      // splitting field of the residual data
  int L = 1;       // [K : F_q]
  int E = 1;       // w^E = e
  std::vector<Elt> embed;  // F_q encoding -> K encoding
  std::vector<TruncSeries> roots;  // canonical order, in K[[w]]
  int root_prec = 0;               // common w-precision of the roots
  std::vector<int> tau;            // inertia generator on root indices
  std::vector<int> sigma;          // q-Frobenius on root indices
  std::vector<std::vector<int>> geometric;  // tau-orbits of roots
  std::vector<int> geo_sigma;               // Frobenius on geometric branches
  std::vector<ArithBranch> arith;
  std::vector<SeriesPoly> factors;  // arithmetic factors over F_q[[e]]

  int n() const { return int(roots.size()); }
  int s() const { return int(geometric.size()); }
  // Branch index of each root.
  std::vector<int> arith_of_root() const;
};

// Polynomial over F_q[[e]] mapped into K[[w]] (w^E = e), precision E*N.
SeriesPoly lift_to_roots_ring(const SeriesPoly& P, const FieldPtr& K, const std::vector<Elt>& embed, int E);

// All roots of a monic P over F_q[[e]] (coefficients treated as exact), to
// w-precision at least target_prec.
BranchData factor_tame(const SeriesPoly& P, int target_prec_eps = 0);

// Lift P = G0*H0 (mod e) to precision target; G0 monic, factors coprime mod e
// or coprime after a single-slope rescaling t -> e^s t.
std::pair<SeriesPoly, SeriesPoly> hensel_lift(const SeriesPoly& P, const SeriesPoly& G0, const SeriesPoly& H0,
                                              int target);

// Evaluate a polynomial with K[[w]] coefficients at x.
TruncSeries poly_eval(const SeriesPoly& P, const TruncSeries& x);

}  // namespace flc
