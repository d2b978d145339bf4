#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

namespace qkit {

enum class ErrorKind {
  // input and usage
  Parse,
  Usage,
  UnknownElement,
  SizeCapExceeded,
  // order
  Cycle,
  NotALattice,
  NotJoinPreserving,
  NotMeetPreserving,
  // closure
  InvalidSpace,
  C1Violation,
  C2Violation,
  C3Violation,
  // resolution
  MonotonicityViolation,
  JoinAxiomViolation,
  EmptyKernelViolation,
  NotAnEmbedding,
  // transitions and functors
  NotComposable,
  LemmaViolation,
  ASharpFails,
  ValueOutsideImage,
  NotAClosMorphism,
  NotContinuous,
  // quantum
  OrthoLawViolation,
  NotOrthomodular,
  NotAtomistic,
};

std::string_view to_string(ErrorKind kind);

/// True for errors that come from malformed input or bad invocation rather
/// than from a structure that fails one of the axioms.
bool is_input_error(ErrorKind kind);

/// Every failure carries a kind and a machine-readable witness.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        nlohmann::json witness = nullptr)
      : std::runtime_error(message), kind_(kind), witness_(std::move(witness)) {}

  ErrorKind kind() const { return kind_; }
  const nlohmann::json& witness() const { return witness_; }

  nlohmann::json to_json() const;

 private:
  ErrorKind kind_;
  nlohmann::json witness_;
};

}  // namespace qkit
