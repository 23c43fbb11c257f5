#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace flc {

// Finite field F_{p^m}. Elements are encoded as integers sum c_i p^i, where
// c_0 + c_1 x + ... is the residue modulo the canonical modulus (the
// lexicographically least monic irreducible of degree m, compared on
// (c_0, c_1, ..., c_{m-1})).
class FqField {
 public:
  using Elt = uint32_t;

  static std::shared_ptr<const FqField> get(unsigned p, unsigned m);

  unsigned p() const { return p_; }
  unsigned m() const { return m_; }
  uint64_t q() const { return q_; }
  // Low coefficients of the monic modulus, c_0..c_{m-1}.
  const std::vector<unsigned>& modulus() const { return modulus_; }
  Elt generator() const { return gen_; }

  Elt add(Elt a, Elt b) const;
  Elt sub(Elt a, Elt b) const;
  Elt neg(Elt a) const;
  Elt mul(Elt a, Elt b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  Elt inv(Elt a) const;
  Elt div(Elt a, Elt b) const { return mul(a, inv(b)); }
  Elt pow(Elt a, uint64_t e) const;
  Elt from_int(long long v) const;
  // a^p
  Elt frob(Elt a) const { return pow(a, p_); }
  // Discrete log to the generator; a != 0.
  uint64_t log(Elt a) const { return log_[a]; }
  Elt exp(uint64_t k) const { return exp_[k % (q_ - 1)]; }
  std::vector<unsigned> digits(Elt a) const;
  Elt from_digits(const std::vector<unsigned>& d) const;

  // Elements of the subfield of size p^k (k | m), sorted by encoding.
  std::vector<Elt> subfield(unsigned k) const;
  // Image of the canonical F_{p^k} generator x under an embedding into this
  // field: the least-encoded root of the F_{p^k} modulus.
  Elt embed_root(const FqField& small) const;
  // Map from the small field's encoding to this field's encoding.
  std::vector<Elt> embedding(const FqField& small) const;
  // Primitive r-th root of unity g^((q-1)/r), or 0 if r does not divide q-1.
  Elt root_of_unity(uint64_t r) const;

  FqField(unsigned p, unsigned m);

 private:
  unsigned p_, m_;
  uint64_t q_;
  std::vector<unsigned> modulus_;
  std::vector<uint64_t> pw_;
  Elt gen_ = 0;
  std::vector<Elt> exp_;
  std::vector<uint32_t> log_;
  std::vector<Elt> addtab_;  // only for small fields
};

using FieldPtr = std::shared_ptr<const FqField>;

// Polynomial helpers over F_p, coefficient vectors low degree first.
bool irreducible_mod_p(const std::vector<unsigned>& monic_low, unsigned p);
std::vector<unsigned> canonical_modulus(unsigned p, unsigned m);
bool is_prime(uint64_t n);

}  // namespace flc
