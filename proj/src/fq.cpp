#include "flc/fq.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

#include "flc/error.hpp"

namespace flc {

const char* err_name(Err e) {
  switch (e) {
    case Err::BadCharacteristic: return "BadCharacteristic";
    case Err::UnsupportedOrder: return "UnsupportedOrder";
    case Err::PrecisionExhausted: return "PrecisionExhausted";
    case Err::WildRamification: return "WildRamification";
    case Err::NotCoprime: return "NotCoprime";
    case Err::Inconsistent: return "Inconsistent";
    case Err::NotGRegular: return "NotGRegular";
    case Err::NotRegular: return "NotRegular";
    case Err::CombinatorialBlowup: return "CombinatorialBlowup";
    case Err::UnsupportedKappa: return "UnsupportedKappa";
    case Err::UnsupportedH: return "UnsupportedH";
    case Err::Unsupported: return "Unsupported";
    case Err::HypothesisViolated: return "HypothesisViolated";
    case Err::ParseError: return "ParseError";
  }
  return "Error";
}

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

using Poly = std::vector<long>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

long inv_mod(long a, long p) {
  long r = 1, b = a % p, e = p - 2;
  if (b < 0) b += p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

Poly pmod(Poly a, const Poly& f, long p) {
  trim(a);
  long lc = inv_mod(f.back(), p);
  while (a.size() >= f.size()) {
    long c = a.back() * lc % p;
    size_t sh = a.size() - f.size();
    for (size_t i = 0; i < f.size(); ++i) a[sh + i] = ((a[sh + i] - c * f[i]) % p + p) % p;
    trim(a);
  }
  return a;
}

Poly pmulmod(const Poly& a, const Poly& b, const Poly& f, long p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return pmod(r, f, p);
}

Poly ppowmod(Poly b, uint64_t e, const Poly& f, long p) {
  Poly r{1};
  r = pmod(r, f, p);
  b = pmod(b, f, p);
  while (e) {
    if (e & 1) r = pmulmod(r, b, f, p);
    b = pmulmod(b, b, f, p);
    e >>= 1;
  }
  return r;
}

Poly pgcd(Poly a, Poly b, long p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = pmod(a, b, p);
    a = b;
    b = r;
  }
  return a;
}

}  // namespace

bool irreducible_mod_p(const std::vector<unsigned>& monic_low, unsigned p) {
  unsigned m = monic_low.size();
  if (m == 0) return false;
  Poly f(monic_low.begin(), monic_low.end());
  f.push_back(1);
  if (m == 1) return true;
  Poly x{0, 1};
  // x^{p^m} == x mod f, and gcd(x^{p^{m/r}} - x, f) = 1 for primes r | m.
  auto frob_pow = [&](unsigned k) {
    Poly y = x;
    for (unsigned i = 0; i < k; ++i) y = ppowmod(y, p, f, p);
    return y;
  };
  Poly y = frob_pow(m);
  Poly xm = pmod(x, f, p);
  trim(y);
  if (y != xm) return false;
  for (unsigned r = 2; r <= m; ++r) {
    if (m % r || !is_prime(r)) continue;
    Poly z = frob_pow(m / r);
    z.resize(std::max<size_t>(z.size(), 2), 0);
    z[1] = (z[1] - 1 + p) % p;
    trim(z);
    Poly g = pgcd(f, z, p);
    if (g.size() > 1) return false;
  }
  return true;
}

std::vector<unsigned> canonical_modulus(unsigned p, unsigned m) {
  // Lexicographic order on (c_0, ..., c_{m-1}): c_0 is the most significant.
  std::vector<unsigned> c(m, 0);
  uint64_t total = 1;
  for (unsigned i = 0; i < m; ++i) total *= p;
  for (uint64_t idx = 0; idx < total; ++idx) {
    uint64_t v = idx;
    for (int i = int(m) - 1; i >= 0; --i) {
      c[i] = v % p;
      v /= p;
    }
    if (irreducible_mod_p(c, p)) return c;
  }
  throw std::logic_error("no irreducible polynomial");
}

FqField::FqField(unsigned p, unsigned m) : p_(p), m_(m) {
  if (!is_prime(p) || m == 0) throw std::invalid_argument("bad field parameters");
  q_ = 1;
  pw_.push_back(1);
  for (unsigned i = 0; i < m; ++i) {
    q_ *= p;
    pw_.push_back(q_);
  }
  if (q_ > (uint64_t(1) << 26)) throw std::invalid_argument("field too large");
  modulus_ = canonical_modulus(p, m);
  // Multiplication of digit vectors modulo the modulus.
  auto mulpoly = [&](const std::vector<unsigned>& a, const std::vector<unsigned>& b) {
    std::vector<unsigned long> r(2 * m, 0);
    for (unsigned i = 0; i < m; ++i)
      if (a[i])
        for (unsigned j = 0; j < m; ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    for (int k = int(2 * m) - 1; k >= int(m); --k) {
      unsigned long c = r[k];
      if (!c) continue;
      r[k] = 0;
      for (unsigned i = 0; i < m; ++i) r[k - m + i] = (r[k - m + i] + (p - modulus_[i]) * c) % p;
    }
    std::vector<unsigned> out(m);
    for (unsigned i = 0; i < m; ++i) out[i] = r[i];
    return out;
  };
  // Primitive element: least encoding whose order is q-1.
  exp_.assign(2 * (q_ - 1) + 1, 0);
  log_.assign(q_, 0);
  for (Elt g = 1; g < q_; ++g) {
    auto gd = digits(g);
    std::vector<unsigned> cur(m, 0);
    cur[0] = 1;
    bool ok = true;
    std::vector<Elt> tmp(q_ - 1);
    for (uint64_t k = 0; k < q_ - 1; ++k) {
      Elt e = from_digits(cur);
      if (k > 0 && e == 1) {
        ok = false;
        break;
      }
      tmp[k] = e;
      cur = mulpoly(cur, gd);
    }
    if (!ok) continue;
    gen_ = g;
    for (uint64_t k = 0; k < q_ - 1; ++k) {
      exp_[k] = tmp[k];
      exp_[k + q_ - 1] = tmp[k];
      log_[tmp[k]] = k;
    }
    break;
  }
  if (q_ <= 512) {
    addtab_.resize(q_ * q_);
    for (Elt a = 0; a < q_; ++a)
      for (Elt b = 0; b < q_; ++b) {
        auto da = digits(a), db = digits(b);
        for (unsigned i = 0; i < m; ++i) da[i] = (da[i] + db[i]) % p;
        addtab_[a * q_ + b] = from_digits(da);
      }
  }
}

std::shared_ptr<const FqField> FqField::get(unsigned p, unsigned m) {
  static std::mutex mu;
  static std::map<std::pair<unsigned, unsigned>, std::shared_ptr<const FqField>> cache;
  std::lock_guard<std::mutex> lk(mu);
  auto key = std::make_pair(p, m);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto f = std::make_shared<const FqField>(p, m);
  cache[key] = f;
  return f;
}

std::vector<unsigned> FqField::digits(Elt a) const {
  std::vector<unsigned> d(m_);
  for (unsigned i = 0; i < m_; ++i) {
    d[i] = a % p_;
    a /= p_;
  }
  return d;
}

FqField::Elt FqField::from_digits(const std::vector<unsigned>& d) const {
  uint64_t v = 0;
  for (int i = int(m_) - 1; i >= 0; --i) v = v * p_ + d[i];
  return Elt(v);
}

FqField::Elt FqField::add(Elt a, Elt b) const {
  if (!addtab_.empty()) return addtab_[a * q_ + b];
  if (m_ == 1) return (a + b) % p_;
  Elt r = 0;
  for (unsigned i = 0; i < m_; ++i) {
    unsigned s = (a % p_ + b % p_) % p_;
    r += s * pw_[i];
    a /= p_;
    b /= p_;
  }
  return r;
}

FqField::Elt FqField::neg(Elt a) const {
  if (m_ == 1) return a ? p_ - a : 0;
  Elt r = 0;
  for (unsigned i = 0; i < m_; ++i) {
    unsigned s = a % p_;
    r += (s ? p_ - s : 0) * pw_[i];
    a /= p_;
  }
  return r;
}

FqField::Elt FqField::sub(Elt a, Elt b) const { return add(a, neg(b)); }

FqField::Elt FqField::inv(Elt a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

FqField::Elt FqField::pow(Elt a, uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  return exp_[(log_[a] * (e % (q_ - 1))) % (q_ - 1)];
}

FqField::Elt FqField::from_int(long long v) const {
  long long r = v % (long long)p_;
  if (r < 0) r += p_;
  return Elt(r);
}

std::vector<FqField::Elt> FqField::subfield(unsigned k) const {
  if (m_ % k) throw std::invalid_argument("not a subfield degree");
  uint64_t qs = 1;
  for (unsigned i = 0; i < k; ++i) qs *= p_;
  std::vector<Elt> out{0};
  uint64_t step = (q_ - 1) / (qs - 1);
  for (uint64_t j = 0; j < qs - 1; ++j) out.push_back(exp_[j * step]);
  std::sort(out.begin(), out.end());
  return out;
}

FqField::Elt FqField::embed_root(const FqField& small) const {
  if (small.p_ != p_ || m_ % small.m_) throw std::invalid_argument("no embedding");
  for (Elt x = 0; x < q_; ++x) {
    // evaluate monic modulus at x
    Elt acc = 1;
    for (int i = int(small.m_) - 1; i >= 0; --i) acc = add(mul(acc, x), from_int(small.modulus_[i]));
    if (acc == 0) return x;
  }
  throw std::logic_error("modulus has no root");
}

std::vector<FqField::Elt> FqField::embedding(const FqField& small) const {
  Elt r = embed_root(small);
  std::vector<Elt> out(small.q_);
  for (Elt a = 0; a < small.q_; ++a) {
    auto d = small.digits(a);
    Elt acc = 0;
    for (int i = int(small.m_) - 1; i >= 0; --i) acc = add(mul(acc, r), from_int(d[i]));
    out[a] = acc;
  }
  return out;
}

FqField::Elt FqField::root_of_unity(uint64_t r) const {
  if (r == 0 || (q_ - 1) % r) return 0;
  return exp_[(q_ - 1) / r];
}

}  // namespace flc
