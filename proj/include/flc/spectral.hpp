#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "flc/olattice.hpp"
#include "flc/puiseux.hpp"
#include "flc/rootdata.hpp"

namespace flc {

// Characteristic a = (a_1..a_n) with P(a,t) = t^n - a_1 t^{n-1} + ... + (-1)^n a_n.
struct LocalChar {
  RootDatum rd;
  FieldPtr F;
  std::vector<TruncSeries> a;

  int n() const { return int(a.size()); }
  int prec() const;
  SeriesPoly P() const { return char_poly_from_a(a); }
  LocalChar truncated(int N) const;
};

LocalChar make_local_char(const RootDatum& rd, const FieldPtr& F, const std::vector<TruncSeries>& a);

// The order B = O[t]/P inside its normalization B^flat = prod O_{E_i}, in a
// fixed O-basis b_1..b_n of B^flat. All matrices are over O / e^K.
struct OrderData {
  FieldPtr F;
  int n = 0;
  int S = 0;    // B^flat = e^{-S} Y in t-coordinates
  OLattice Y;   // modulus S
  int K = 0;    // working modulus in B^flat coordinates
  OMat T;       // multiplication by t
  OMat embed;   // coordinates of t^i, i.e. the inclusion B -> B^flat
  OLattice B;   // B in B^flat coordinates
  OLattice conductor;
  std::vector<int> conductor_exponent;  // per arithmetic branch, in uniformizer units
  std::vector<int> e, f;                // per arithmetic branch
  std::vector<OMat> idem;               // idempotent of each arithmetic branch
  std::vector<OMat> eta;                // uniformizer on branch i, 1 on the others
  std::vector<Elt> eta_norm_lead;       // N(eta_i) = c_i e^{f_i} + ..., c_i in F_q
  std::vector<OMat> basis_mult;         // multiplication by b_k
  FieldPtr Kf;                          // residue splitting field
  std::vector<std::vector<Elt>> residue;  // residue[i][k]: b_k at a root of branch i, mod w
  int delta_serre = 0;
  int delta_det = 0;

  int num_branches() const { return int(e.size()); }
  // Residue of x (B^flat coordinates) on branch i, in Kf.
  Elt residue_of(const OVec& x, int i) const;
  // True iff L B^flat = B^flat, i.e. every branch residue of L is nonzero.
  bool is_normalized(const OLattice& L) const;
};

struct LocalInvariants {
  int d = 0;
  int s = 0;
  int c = 0;
  int delta = 0;
  int delta_serre = 0;
  int delta_det = 0;
  int pi0_rank = 0;
  FinAbGroup pi0;
  std::vector<std::pair<std::pair<int, int>, Rat>> radicial;  // (i, j) -> r(alpha_ij)
  bool simple_case = false;
  std::vector<ArithBranch> branches;
};

struct Analysis {
  LocalChar a;
  BranchData br;
  OrderData ord;
  LocalInvariants inv;
};

// Full local analysis; throws Inconsistent if the two delta routes disagree.
Analysis analyze(const LocalChar& a);
LocalInvariants compute_invariants(const LocalChar& a);
std::vector<std::vector<TruncSeries>> companion_point(const LocalChar& a);
std::vector<std::pair<std::pair<int, int>, Rat>> radicial_valuations(const BranchData& br);

struct UnitIndex {
  long long index = 1;          // #(B^flat)^x / B^x
  long long neron_constant = 1;  // #(J^{flat,0}(O) / J^0(O))
};
UnitIndex unit_index(const OrderData& ord);

// Number of units of the subring spanned over F_q by `gens` (vectors in
// B^flat / e^k B^flat, given as O-vectors); gens must span a ring
// containing e^k B^flat's image, i.e. the count is taken inside that quotient.
long long count_units(const OrderData& ord, const std::vector<OVec>& gens, int k);

// Endoscopic side of a transfer. kind: "G" (a_H = a), "torus_unramified" or
// "torus_split" (SL_2 tori with coordinate x), "levi" (GL block characteristics).
struct EndoChar {
  std::string kind = "G";
  std::vector<LocalChar> blocks;
  TruncSeries x;
};

LocalChar transfer_a(const EndoscopicDatum& ed, const EndoChar& aH);
int disc_valuation_H(const EndoChar& aH);
int resultant_valuation_H(const EndoscopicDatum& ed, const EndoChar& aH);
bool detect_simple_case(const LocalInvariants& inv, const EndoscopicDatum& ed);
// Least non-square of F_q by encoding.
Elt least_nonsquare(const FqField& F);

}  // namespace flc
