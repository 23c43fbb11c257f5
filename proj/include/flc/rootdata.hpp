#pragma once

#include <string>
#include <vector>

#include "flc/rational.hpp"

namespace flc {

enum class Kind { GL, SL, PGL };
const char* kind_name(Kind k);
Kind parse_kind(const std::string& s);

using IntMat = std::vector<std::vector<long long>>;

// Split type-A root datum. Cocharacters are coordinates in a fixed basis of
// X_*: GL uses e_1..e_n, SL uses the simple coroots e_k - e_{k+1}, PGL the
// images of e_1..e_{n-1} in Z^n / Z(1,...,1). Roots are given in the dual
// basis so that <alpha, beta^vee> is a dot product.
struct RootDatum {
  Kind kind = Kind::GL;
  int n = 1;
  int rank = 1;
  unsigned p = 0;
  std::vector<std::pair<int, int>> root_index;  // alpha_{ij} as (i, j), i != j
  std::vector<std::vector<long long>> roots;
  std::vector<std::vector<long long>> coroots;
  std::vector<int> exponents;
  long long weyl_order = 1;

  int num_roots() const { return int(roots.size()); }
  // Cocharacter coordinates of the ambient vector v in Z^n (Sum v = 0 for SL).
  std::vector<long long> cochar_from_ambient(const std::vector<long long>& v) const;
  // Matrix on X_* of the permutation e_i -> e_{perm[i]}.
  IntMat permutation_action(const std::vector<int>& perm) const;
};

RootDatum build_root_datum(Kind kind, int n, unsigned p);

struct FinAbGroup {
  int free_rank = 0;
  std::vector<long long> torsion;  // d_1 | d_2 | ..., each > 1
  long long torsion_order() const;
  bool operator==(const FinAbGroup& o) const { return free_rank == o.free_rank && torsion == o.torsion; }
  std::string str() const;
};

struct Kappa {
  std::vector<Rat> values;  // kappa on the basis of X_*, mod 1
  int order = 1;
  // kappa(x) in Q/Z, normalized to [0, 1).
  Rat eval(const std::vector<long long>& x) const;
};
Kappa make_kappa(const std::vector<Rat>& values);

struct EndoscopicDatum {
  RootDatum parent;
  Kappa kappa;
  std::vector<int> sub_roots;  // indices into parent.roots with kappa(alpha^vee) = 1
  std::string H_kind;          // "G", "torus", or "levi:<block sizes>"
  std::vector<int> blocks;     // block sizes of H (type A)
};

EndoscopicDatum endoscopic_datum(const RootDatum& rd, const Kappa& kappa);
long long resultant_degree_global(const EndoscopicDatum& ed, long long degD);

struct SNF {
  std::vector<long long> diag;  // length min(rows, cols)
  IntMat U, V;                  // U * A * V = D
};
SNF smith_normal_form(const IntMat& A);

// X_* / sum_w (w - 1) X_* for the given generators.
FinAbGroup coinvariants(int lattice_rank, const std::vector<IntMat>& generators);
// Rank of the invariant sublattice {x : w x = x for all generators}.
int invariant_rank(int lattice_rank, const std::vector<IntMat>& generators);
// Number of torsion elements of the coinvariant group fixed by sigma.
long long fixed_torsion_of_coinvariants(int lattice_rank, const std::vector<IntMat>& generators,
                                        const IntMat& sigma);

bool nonstandard_pair_check(const RootDatum& rd1, const RootDatum& rd2, unsigned p);

IntMat identity_mat(int n);
IntMat mat_mul(const IntMat& A, const IntMat& B);

}  // namespace flc
