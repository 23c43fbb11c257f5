#pragma once

#include <string>
#include <vector>

#include "flc/springer.hpp"

namespace flc {

enum class Normalization { NeronConnected, ConnectedModel };
const char* normalization_name(Normalization n);

struct OrbitalValue {
  Cyclo value;
  Normalization norm = Normalization::NeronConnected;
  long long conversion = 1;       // #(J^{flat,0}(O) / J^0(O))
  std::vector<Rat> breakdown;     // O_xi per H^1 class, Neron normalization
};

OrbitalValue kappa_orbital(const LocalChar& a, const Kappa& kappa, Normalization norm, const EnumOptions& opt = {});
OrbitalValue stable_orbital_H(const EndoscopicDatum& ed, const EndoChar& aH, Normalization norm,
                              const EnumOptions& opt = {});

struct CaseReport {
  std::string case_id;
  std::string check;  // "ls" or "nonstandard"
  unsigned q = 0;
  Kind kind = Kind::GL;
  int n = 0;
  LocalInvariants inv;
  std::string H_kind;
  int r_v = 0;
  int kappa_order = 1;
  bool simple_case = false;
  Cyclo lhs, rhs;
  long long conversion_lhs = 1, conversion_rhs = 1;
  int precision = 0;
  bool pass = false;
  std::string error;   // set when the case could not be evaluated
  double seconds = 0;
};

// O^kappa_a = q^{r_v} SO_{a_H} with a = transfer of a_H, both sides under the
// shared Neron normalization.
CaseReport ls_check(const EndoscopicDatum& ed, const EndoChar& aH, const EnumOptions& opt = {});
// SO on SL_2 against SO on PGL_2 at the same characteristic.
CaseReport nonstandard_check(const LocalChar& a1, const LocalChar& a2, const EnumOptions& opt = {});

}  // namespace flc
