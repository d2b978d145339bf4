#include "qkit/error.hpp"

namespace qkit {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::Usage: return "UsageError";
    case ErrorKind::UnknownElement: return "UnknownElement";
    case ErrorKind::SizeCapExceeded: return "SizeCapExceeded";
    case ErrorKind::Cycle: return "CycleError";
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::NotJoinPreserving: return "NotJoinPreserving";
    case ErrorKind::NotMeetPreserving: return "NotMeetPreserving";
    case ErrorKind::InvalidSpace: return "InvalidSpace";
    case ErrorKind::C1Violation: return "C1Violation";
    case ErrorKind::C2Violation: return "C2Violation";
    case ErrorKind::C3Violation: return "C3Violation";
    case ErrorKind::MonotonicityViolation: return "MonotonicityViolation";
    case ErrorKind::JoinAxiomViolation: return "JoinAxiomViolation";
    case ErrorKind::EmptyKernelViolation: return "EmptyKernelViolation";
    case ErrorKind::NotAnEmbedding: return "NotAnEmbedding";
    case ErrorKind::NotComposable: return "NotComposable";
    case ErrorKind::LemmaViolation: return "LemmaViolation";
    case ErrorKind::ASharpFails: return "ASharpFails";
    case ErrorKind::ValueOutsideImage: return "ValueOutsideImage";
    case ErrorKind::NotAClosMorphism: return "NotAClosMorphism";
    case ErrorKind::NotContinuous: return "NotContinuous";
    case ErrorKind::OrthoLawViolation: return "OrthoLawViolation";
    case ErrorKind::NotOrthomodular: return "NotOrthomodular";
    case ErrorKind::NotAtomistic: return "NotAtomistic";
  }
  return "Unknown";
}

bool is_input_error(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse:
    case ErrorKind::Usage:
    case ErrorKind::UnknownElement:
    case ErrorKind::SizeCapExceeded:
      return true;
    default:
      return false;
  }
}

nlohmann::json Error::to_json() const {
  nlohmann::json j{{"error", std::string(to_string(kind_))}, {"message", what()}};
  if (!witness_.is_null()) j["witness"] = witness_;
  return j;
}

}  // namespace qkit
