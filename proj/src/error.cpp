#include "regrep/error.hpp"

namespace regrep {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPrimeP: return "NonPrimeP";
    case ErrorCode::BadDegree: return "BadDegree";
    case ErrorCode::SpecMismatch: return "SpecMismatch";
    case ErrorCode::NotAUnit: return "NotAUnit";
    case ErrorCode::BadLevel: return "BadLevel";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::BadExponent: return "BadExponent";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::NotRegular: return "NotRegular";
    case ErrorCode::NotASubgroup: return "NotASubgroup";
    case ErrorCode::NotStable: return "NotStable";
    case ErrorCode::ObstructionNonzero: return "ObstructionNonzero";
    case ErrorCode::NotElementaryAbelian: return "NotElementaryAbelian";
    case ErrorCode::DegenerateForm: return "DegenerateForm";
    case ErrorCode::NoLagrangian: return "NoLagrangian";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NoExtensionFound: return "NoExtensionFound";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::CheckFailed: return "CheckFailed";
  }
  return "Unknown";
}

}  // namespace regrep
