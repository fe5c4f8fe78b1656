#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace flashcodes {

enum class ErrorKind {
  InvalidArgument,
  DimensionMismatch,
  OverLevel,
  Overflow,
  NotAnEdge,
  LabelOutOfRange,
  CorruptState,
  Exhausted,
  Unreachable,
  SaturatedCell,
  NoFeasibleB,
  InfeasibleLayout,
  StateSpaceTooLarge,
  CapsExceeded,
  ContractViolation,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Failures that end a rewrite sequence normally rather than indicating a bug.
inline bool is_capacity_failure(ErrorKind kind) {
  return kind == ErrorKind::Exhausted || kind == ErrorKind::Unreachable;
}

}  // namespace flashcodes
