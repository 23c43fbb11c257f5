#pragma once

#include <climits>
#include <string>
#include <utility>
#include <vector>

#include "flc/fq.hpp"
#include "flc/rational.hpp"

namespace flc {

using Elt = FqField::Elt;

// Element of F[[e]] known modulo e^N.
class TruncSeries {
 public:
  TruncSeries() = default;
  TruncSeries(FieldPtr F, int N) : F_(std::move(F)), c_(N, 0) {}
  TruncSeries(FieldPtr F, std::vector<Elt> c) : F_(std::move(F)), c_(std::move(c)) {}

  static TruncSeries constant(FieldPtr F, Elt a, int N);
  static TruncSeries monomial(FieldPtr F, Elt a, int k, int N);

  const FieldPtr& field() const { return F_; }
  const FqField& F() const { return *F_; }
  int prec() const { return int(c_.size()); }
  Elt operator[](int i) const { return i < prec() ? c_[i] : 0; }
  Elt& at(int i) { return c_[i]; }
  const std::vector<Elt>& coeffs() const { return c_; }

  // Valuation, or prec() when the series vanishes to known precision.
  int val() const;
  bool is_zero() const { return val() >= prec(); }
  bool is_unit() const { return prec() > 0 && c_[0] != 0; }

  TruncSeries operator+(const TruncSeries& o) const;
  TruncSeries operator-(const TruncSeries& o) const;
  TruncSeries operator-() const;
  TruncSeries operator*(const TruncSeries& o) const;
  TruncSeries scale(Elt a) const;
  TruncSeries truncate(int N) const;
  // Multiply by e^k keeping the precision (top coefficients drop out).
  TruncSeries shift(int k) const;
  // Divide by e^k; the first k coefficients must vanish. Precision drops by k.
  TruncSeries unshift(int k) const;
  // Inverse of a unit.
  TruncSeries inverse() const;
  // e |-> e^k substitution; precision becomes k*prec.
  TruncSeries inflate(int k) const;

  bool operator==(const TruncSeries& o) const { return c_ == o.c_; }
  std::string str() const;

 private:
  FieldPtr F_;
  std::vector<Elt> c_;
};

// Laurent element e^v * u, u a unit series; v = INT_MAX encodes zero.
struct LaurentElt {
  int v = INT_MAX;
  TruncSeries unit;

  static LaurentElt from_series(const TruncSeries& s);
  bool is_zero() const { return v == INT_MAX; }
  LaurentElt operator*(const LaurentElt& o) const;
  LaurentElt inverse() const;
};

// Polynomial with series coefficients, low degree first.
using SeriesPoly = std::vector<TruncSeries>;

// Monic P(t) = t^n - a_1 t^{n-1} + ... + (-1)^n a_n from a = (a_1..a_n).
SeriesPoly char_poly_from_a(const std::vector<TruncSeries>& a);
// Inverse of char_poly_from_a.
std::vector<TruncSeries> a_from_char_poly(const SeriesPoly& P);

SeriesPoly poly_derivative(const SeriesPoly& P);
SeriesPoly poly_mul(const SeriesPoly& A, const SeriesPoly& B);

// Valuation of det(M) by pivoting on minimal valuation; throws
// PrecisionExhausted when the determinant vanishes to known precision.
int det_valuation(std::vector<std::vector<TruncSeries>> M);
// Valuation of Res(A, B) via the Sylvester matrix.
int resultant_valuation(const SeriesPoly& A, const SeriesPoly& B);
// Valuation of the discriminant of a monic P.
int disc_valuation(const SeriesPoly& P);

struct Slope {
  Rat slope;  // common valuation of the roots on this segment
  int multiplicity;
  bool operator==(const Slope& o) const { return slope == o.slope && multiplicity == o.multiplicity; }
};
// Newton polygon of a monic P: root valuations with multiplicities,
// increasing slope order.
std::vector<Slope> newton_polygon(const SeriesPoly& P);

// Companion matrix whose characteristic polynomial is P(a, t).
std::vector<std::vector<TruncSeries>> companion_point(const std::vector<TruncSeries>& a);
// Characteristic polynomial det(t - M), by Faddeev-LeVerrier (needs p > n).
SeriesPoly char_poly_matrix(const std::vector<std::vector<TruncSeries>>& M);

}  // namespace flc
