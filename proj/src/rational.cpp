#include "flc/rational.hpp"

#include <sstream>
#include <stdexcept>

namespace flc {

std::string rat_str(const Rat& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(std::stoll(s));
    long long a = std::stoll(s.substr(0, slash)), b = std::stoll(s.substr(slash + 1));
    if (b == 0) throw std::invalid_argument("zero denominator");
    return Rat(a, b);
  } catch (const std::logic_error&) {
    throw std::invalid_argument("bad rational '" + s + "'");
  }
}

// Internally every value lives in Q(zeta_12) = Q[x]/(x^4 - x^2 + 1); the
// nominal order m only records where it came from.
namespace {
constexpr int kDim = 4;

std::vector<Rat> mulz(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  std::vector<Rat> r(2 * kDim - 1, Rat(0));
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) r[i + j] += a[i] * b[j];
  // x^4 = x^2 - 1
  for (int k = 2 * kDim - 2; k >= kDim; --k) {
    Rat c = r[k];
    r[k] = 0;
    r[k - 2] += c;
    r[k - 4] -= c;
  }
  r.resize(kDim);
  return r;
}
}  // namespace

Cyclo::Cyclo(Rat r, int m) : m_(m), c_(kDim, Rat(0)) { c_[0] = r; }

Cyclo Cyclo::zeta_pow(int m, long long k) {
  if (m < 1 || 12 % m) throw std::invalid_argument("unsupported root of unity order");
  long long e = ((k % m) + m) % m * (12 / m);
  std::vector<Rat> x(kDim, Rat(0));
  x[0] = 1;
  std::vector<Rat> z(kDim, Rat(0));
  z[1] = 1;
  for (long long i = 0; i < e; ++i) x = mulz(x, z);
  Cyclo out(Rat(0), m);
  out.c_ = x;
  return out;
}

bool Cyclo::is_rational() const {
  for (int i = 1; i < kDim; ++i)
    if (c_[i] != Rat(0)) return false;
  return true;
}

Rat Cyclo::rational() const {
  if (!is_rational()) throw std::domain_error("not rational");
  return c_[0];
}

Cyclo Cyclo::operator+(const Cyclo& o) const {
  Cyclo r = *this;
  for (int i = 0; i < kDim; ++i) r.c_[i] += o.c_[i];
  r.m_ = std::max(m_, o.m_);
  return r;
}

Cyclo Cyclo::operator-(const Cyclo& o) const {
  Cyclo r = *this;
  for (int i = 0; i < kDim; ++i) r.c_[i] -= o.c_[i];
  r.m_ = std::max(m_, o.m_);
  return r;
}

Cyclo Cyclo::operator*(const Cyclo& o) const {
  Cyclo r = *this;
  r.c_ = mulz(c_, o.c_);
  r.m_ = std::max(m_, o.m_);
  return r;
}

Cyclo Cyclo::operator/(const Rat& d) const {
  Cyclo r = *this;
  for (auto& x : r.c_) x /= d;
  return r;
}

bool Cyclo::operator==(const Cyclo& o) const { return c_ == o.c_; }

std::string Cyclo::str() const {
  if (is_rational()) return rat_str(c_[0]);
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < kDim; ++i) {
    if (c_[i] == Rat(0)) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << rat_str(c_[i]) << ")";
    if (i == 1) os << "*z12";
    if (i > 1) os << "*z12^" << i;
  }
  return os.str();
}

}  // namespace flc
