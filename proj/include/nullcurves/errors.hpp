#pragma once

#include <stdexcept>
#include <string>

namespace nullcurves {

enum class ErrorCode {
  OutOfDomain,
  GridTooCoarse,
  NonzeroResidue,
  DomainMismatch,
  TooFewSamples,
  ZeroOnDomain,
  TruncationOverflow,
  NotImmersion,
  LiftBranchZero,
  NotNull,
  GeneralPositionFailed,
  SpinorZero,
  NSearchExhausted,
  JacobianSingular,
  NewtonStalled,
  BallExceeded,
  FitResidualTooLarge,
  DegenerateAnchor,
  StepRegressed,
  ClassificationGap,
  ThirdCoordinateVanishes,
  NotUnimodular,
  UnsupportedTarget,
  InvalidInput,
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& msg)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + msg),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace nullcurves
