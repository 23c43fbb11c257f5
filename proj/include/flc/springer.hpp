#pragma once

#include <map>
#include <utility>
#include <vector>

#include "flc/rational.hpp"
#include "flc/spectral.hpp"

namespace flc {

// Working truncation level of a for the enumerator.
int truncation_level(int d);

struct FiberPoint {
  OLattice lattice;            // in B^flat coordinates
  std::vector<int> component;  // L B^flat = prod eta_i^{k_i} B^flat
  int colength = 0;            // dim B^flat / L
  int ind = 0;                 // colength - delta, so ind(B) = 0
  long long stabilizer_order = 1;
  int frobenius_image = 0;
  int h1_class = 0;
};

struct EnumOptions {
  int refinement = 1;  // enumerate a fundamental domain of an index-r sublattice of Lambda
  bool check_stability = true;
  long long guard = 10000000;
  int precision_cap = 256;
  int start_precision = 0;  // first truncation level tried; 0 means truncation_level(d)
};

struct Fiber {
  Analysis an;
  int N = 0;
  int refinement = 1;
  std::vector<std::vector<int>> tops;  // components covered by the enumeration
  std::vector<FiberPoint> points;
  long long candidates = 0;
};

// All B-stable lattices L with L B^flat = M (M = eta^component B^flat), by
// descent through t-invariant subspaces of L / e L.
std::vector<FiberPoint> enumerate_component(const OrderData& od, const std::vector<int>& component, long long guard,
                                            long long& candidates);
Fiber enumerate_fiber(const LocalChar& a, const EnumOptions& opt = {});

// Canonical summary used to compare enumerations at different precisions.
std::vector<std::vector<int>> fiber_signature(const Fiber& f);

// Classes of H^1(F, T) for SL_n as Z^2 / <(0, q-1), (f_i, log c_i), (0, e_i)>,
// where (v, l) records the valuation and residue log of a norm.
struct H1Class {
  int v = 0;
  long long log = 0;
  Cyclo kappa;  // <class, kappa>
};

struct ClassData {
  int g = 1;                     // gcd of residue degrees: ind classes live mod g
  int g_e = 1;                   // gcd of ramification indices
  std::vector<H1Class> classes;  // one per element of H^1 (a single trivial class for GL, PGL)
  long long im_index = 1;        // [Z^a_0 : valuations of norm-one elements]
  long long tors = 1;            // # torsion of (X_*)_I fixed by Frobenius
};

ClassData class_data(const Analysis& an, const Kappa& kappa);
// Decorates points with the H^1 class they belong to (SL), or 0.
void frobenius_and_classes(Fiber& fib, const ClassData& cd);

struct GroupoidCount {
  Cyclo value;           // sum <cl(x), kappa> / #Aut(x), i.e. O^kappa / unit index
  Cyclo neron_value;     // O^kappa with vol of the connected Neron model = 1
  long long unit_index = 1;
  // per H^1 class: (number of iso classes, automorphism order)
  std::map<int, std::pair<long long, long long>> breakdown;
  std::vector<Rat> class_values;  // O_xi per class, Neron normalization
};

GroupoidCount groupoid_count(const Fiber& fib, const Kappa& kappa);

}  // namespace flc
