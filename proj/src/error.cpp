#include "flashcodes/error.hpp"

namespace flashcodes {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::OverLevel: return "OverLevel";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::NotAnEdge: return "NotAnEdge";
    case ErrorKind::LabelOutOfRange: return "LabelOutOfRange";
    case ErrorKind::CorruptState: return "CorruptState";
    case ErrorKind::Exhausted: return "Exhausted";
    case ErrorKind::Unreachable: return "Unreachable";
    case ErrorKind::SaturatedCell: return "SaturatedCell";
    case ErrorKind::NoFeasibleB: return "NoFeasibleB";
    case ErrorKind::InfeasibleLayout: return "InfeasibleLayout";
    case ErrorKind::StateSpaceTooLarge: return "StateSpaceTooLarge";
    case ErrorKind::CapsExceeded: return "CapsExceeded";
    case ErrorKind::ContractViolation: return "ContractViolation";
  }
  return "Unknown";
}

}  // namespace flashcodes
