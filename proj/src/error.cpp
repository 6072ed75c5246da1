#include "kcenter/error.hpp"

namespace kcenter {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::UnboundedSet: return "UnboundedSet";
    case ErrorCode::OriginNotInterior: return "OriginNotInterior";
    case ErrorCode::DegenerateFacets: return "DegenerateFacets";
    case ErrorCode::NegativeRadius: return "NegativeRadius";
    case ErrorCode::WrongGaugeKind: return "WrongGaugeKind";
    case ErrorCode::WrongDimension: return "WrongDimension";
    case ErrorCode::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorCode::EmptyInstance: return "EmptyInstance";
    case ErrorCode::DuplicatePoints: return "DuplicatePoints";
    case ErrorCode::BadIndex: return "BadIndex";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NonConvergence: return "NonConvergence";
    case ErrorCode::WitnessNotFound: return "WitnessNotFound";
    case ErrorCode::DegenerateRadius: return "DegenerateRadius";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::CenterIsAttractive: return "CenterIsAttractive";
  }
  return "Unknown";
}

}  // namespace kcenter
