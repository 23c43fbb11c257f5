#pragma once

#include <stdexcept>
#include <string>

namespace flc {

enum class Err {
  BadCharacteristic,
  UnsupportedOrder,
  PrecisionExhausted,
  WildRamification,
  NotCoprime,
  Inconsistent,
  NotGRegular,
  NotRegular,
  CombinatorialBlowup,
  UnsupportedKappa,
  UnsupportedH,
  Unsupported,
  HypothesisViolated,
  ParseError,
};

const char* err_name(Err e);

class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& msg)
      : std::runtime_error(std::string(err_name(code)) + ": " + msg), code_(code) {}
  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& msg) { throw Error(code, msg); }

}  // namespace flc
