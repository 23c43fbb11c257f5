#pragma once

#include <boost/rational.hpp>
#include <string>
#include <vector>

namespace flc {

using Rat = boost::rational<long long>;

std::string rat_str(const Rat& r);
Rat parse_rat(const std::string& s);

// Element of Q(zeta_m) for m in {1,2,3,4}, stored as coefficients of
// 1, zeta, ..., zeta^{phi(m)-1}.
class Cyclo {
 public:
  Cyclo() : Cyclo(Rat(0)) {}
  explicit Cyclo(Rat r, int m = 1);
  static Cyclo zeta_pow(int m, long long k);

  int order() const { return m_; }
  const std::vector<Rat>& coeffs() const { return c_; }
  bool is_rational() const;
  Rat rational() const;  // requires is_rational()

  Cyclo operator+(const Cyclo& o) const;
  Cyclo operator-(const Cyclo& o) const;
  Cyclo operator*(const Cyclo& o) const;
  Cyclo operator/(const Rat& r) const;
  bool operator==(const Cyclo& o) const;
  bool operator!=(const Cyclo& o) const { return !(*this == o); }
  std::string str() const;

 private:
  int m_;
  std::vector<Rat> c_;
};

}  // namespace flc
