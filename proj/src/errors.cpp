#include "nullcurves/errors.hpp"

namespace nullcurves {

const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::GridTooCoarse: return "GridTooCoarse";
    case ErrorCode::NonzeroResidue: return "NonzeroResidue";
    case ErrorCode::DomainMismatch: return "DomainMismatch";
    case ErrorCode::TooFewSamples: return "TooFewSamples";
    case ErrorCode::ZeroOnDomain: return "ZeroOnDomain";
    case ErrorCode::TruncationOverflow: return "TruncationOverflow";
    case ErrorCode::NotImmersion: return "NotImmersion";
    case ErrorCode::LiftBranchZero: return "LiftBranchZero";
    case ErrorCode::NotNull: return "NotNull";
    case ErrorCode::GeneralPositionFailed: return "GeneralPositionFailed";
    case ErrorCode::SpinorZero: return "SpinorZero";
    case ErrorCode::NSearchExhausted: return "NSearchExhausted";
    case ErrorCode::JacobianSingular: return "JacobianSingular";
    case ErrorCode::NewtonStalled: return "NewtonStalled";
    case ErrorCode::BallExceeded: return "BallExceeded";
    case ErrorCode::FitResidualTooLarge: return "FitResidualTooLarge";
    case ErrorCode::DegenerateAnchor: return "DegenerateAnchor";
    case ErrorCode::StepRegressed: return "StepRegressed";
    case ErrorCode::ClassificationGap: return "ClassificationGap";
    case ErrorCode::ThirdCoordinateVanishes: return "ThirdCoordinateVanishes";
    case ErrorCode::NotUnimodular: return "NotUnimodular";
    case ErrorCode::UnsupportedTarget: return "UnsupportedTarget";
    case ErrorCode::InvalidInput: return "InvalidInput";
  }
  return "UnknownError";
}

}  // namespace nullcurves
