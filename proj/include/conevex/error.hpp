#pragma once

#include <stdexcept>
#include <string>

namespace conevex {

enum class ErrorCode {
  ZeroGenerator,
  NotFullDimensional,
  DimensionMismatch,
  AlphaOutOfRange,
  UnknownLabel,
  EmptyFeasibleSet,
  InfeasibleLabel,
  ZeroFunctional,
  NonPositiveOperator,
  NotInterior,
  NotNormalized,
  NotWeaklyEfficient,
  HypothesisViolation,
  InvalidMultipliers,
  ParseError,
  ValidationError,
  GenerationExhausted,
  OracleDisagreement,
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace conevex
