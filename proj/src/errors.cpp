#include "saito/errors.hpp"

namespace saito {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::Syntax: return "SyntaxError";
    case ErrorCode::RepeatedMonomial: return "RepeatedMonomial";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::DegenerateLoop: return "DegenerateLoop";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::NotInvariant: return "NotInvariant";
    case ErrorCode::FlipSymmetry: return "FlipSymmetry";
    case ErrorCode::NotPreserved: return "NotPreserved";
    case ErrorCode::NotMember: return "NotMember";
    case ErrorCode::BoundExceeded: return "BoundExceeded";
    case ErrorCode::AmbientMismatch: return "AmbientMismatch";
    case ErrorCode::NotSubgroup: return "NotSubgroup";
    case ErrorCode::StructuralAssumptionViolated: return "StructuralAssumptionViolated";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Error";
}

}  // namespace saito
