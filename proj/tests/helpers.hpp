#pragma once

#include <initializer_list>
#include <random>
#include <vector>

#include "flc/series.hpp"

namespace th {

// Series with integer coefficients (mod p) listed from e^0 upwards.
inline flc::TruncSeries ser(const flc::FieldPtr& F, std::initializer_list<long long> c, int N) {
  flc::TruncSeries s(F, N);
  int i = 0;
  for (long long x : c) {
    if (i < N) s.at(i) = F->from_int(x);
    ++i;
  }
  return s;
}

// Monic polynomial from series coefficients, low degree first; leading 1 appended.
inline flc::SeriesPoly monic(const flc::FieldPtr& F, std::vector<flc::TruncSeries> low, int N) {
  low.push_back(flc::TruncSeries::constant(F, 1, N));
  return low;
}

// Random monic polynomial of degree n with coefficients of e-degree < depth.
inline flc::SeriesPoly random_monic(const flc::FieldPtr& F, int n, int depth, int N, std::mt19937_64& rng) {
  flc::SeriesPoly P;
  for (int i = 0; i < n; ++i) {
    flc::TruncSeries c(F, N);
    for (int k = 0; k < depth; ++k) c.at(k) = flc::Elt(rng() % F->q());
    P.push_back(c);
  }
  P.push_back(flc::TruncSeries::constant(F, 1, N));
  return P;
}

}  // namespace th
