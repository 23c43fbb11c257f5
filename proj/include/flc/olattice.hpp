#pragma once

#include <cstdint>
#include <vector>

#include "flc/series.hpp"

namespace flc {

// Column vector over O / e^K.
using OVec = std::vector<TruncSeries>;
// Matrix over O / e^K stored by columns.
using OMat = std::vector<OVec>;

OVec ovec_zero(const FieldPtr& F, int n, int K);
OVec ovec_unit(const FieldPtr& F, int n, int K, int i);
OVec ovec_add(const OVec& a, const OVec& b);
OVec ovec_sub(const OVec& a, const OVec& b);
OVec ovec_scale(const OVec& a, const TruncSeries& s);
OVec ovec_shift(const OVec& a, int k);
OVec mat_apply(const OMat& M, const OVec& v);
OMat mat_compose(const OMat& A, const OMat& B);
OMat mat_identity(const FieldPtr& F, int n, int K);
OMat mat_truncate(const OMat& M, int K);
bool ovec_is_zero(const OVec& v);

// O-lattice e^K O^n <= L <= O^n in canonical Hermite form: column j has its
// pivot e^{k_j} in row j, zeros below, and entries above reduced modulo the
// pivot of their row.
class OLattice {
 public:
  OLattice() = default;
  static OLattice from_generators(const FieldPtr& F, int n, int K, const std::vector<OVec>& gens);
  static OLattice full(const FieldPtr& F, int n, int K);

  int n() const { return n_; }
  int K() const { return K_; }
  const FieldPtr& field() const { return F_; }
  const std::vector<int>& pivots() const { return piv_; }
  // Basis columns; column j is e^{k_j} e_j + (reduced entries above).
  const std::vector<OVec>& columns() const { return cols_; }
  // dim_k(O^n / L)
  int colength() const;

  // Canonical representative of v modulo L.
  OVec reduce(const OVec& v) const;
  bool contains(const OVec& v) const { return ovec_is_zero(reduce(v)); }
  bool contains(const OLattice& o) const;
  // Coordinates z with v = sum z_j col_j modulo e^K O^n; v must lie in L.
  // Entry j is known modulo e^{K - k_j}.
  std::vector<TruncSeries> coords(const OVec& v) const;

  std::vector<uint32_t> key() const;
  bool operator==(const OLattice& o) const { return key() == o.key(); }

 private:
  FieldPtr F_;
  int n_ = 0, K_ = 0;
  std::vector<int> piv_;
  std::vector<OVec> cols_;
};

}  // namespace flc
