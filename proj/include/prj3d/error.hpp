#pragma once

#include <stdexcept>
#include <string>

namespace prj3d {

/// Failure classes raised by the library. The CLI maps them onto exit codes.
enum class Errc {
  DivisionByZero,
  MixedExtension,
  NegativeRadicand,
  DegreeMismatch,
  BidegreeMismatch,
  BothZero,
  NotDivisible,
  SingularMatrix,
  SingularMoebius,
  DegreeTooLow,
  NotReduced,
  RankDeficient,
  NotProper,
  DeltaIdenticallyZero,
  CurvatureDenominatorZero,
  ConstantCurvatures,
  UnsupportedAlgebraicDegree,
  SampleExhaustion,
  SingularSamplePoint,
  GenerationExhausted,
  ParseError,
  InvalidArgument,
};

inline const char* errc_name(Errc e) noexcept {
  switch (e) {
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::MixedExtension: return "MixedExtension";
    case Errc::NegativeRadicand: return "NegativeRadicand";
    case Errc::DegreeMismatch: return "DegreeMismatch";
    case Errc::BidegreeMismatch: return "BidegreeMismatch";
    case Errc::BothZero: return "BothZero";
    case Errc::NotDivisible: return "NotDivisible";
    case Errc::SingularMatrix: return "SingularMatrix";
    case Errc::SingularMoebius: return "SingularMoebius";
    case Errc::DegreeTooLow: return "DegreeTooLow";
    case Errc::NotReduced: return "NotReduced";
    case Errc::RankDeficient: return "RankDeficient";
    case Errc::NotProper: return "NotProper";
    case Errc::DeltaIdenticallyZero: return "DeltaIdenticallyZero";
    case Errc::CurvatureDenominatorZero: return "CurvatureDenominatorZero";
    case Errc::ConstantCurvatures: return "ConstantCurvatures";
    case Errc::UnsupportedAlgebraicDegree: return "UnsupportedAlgebraicDegree";
    case Errc::SampleExhaustion: return "SampleExhaustion";
    case Errc::SingularSamplePoint: return "SingularSamplePoint";
    case Errc::GenerationExhausted: return "GenerationExhausted";
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace prj3d
