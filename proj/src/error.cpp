#include "orthosum/error.hpp"

namespace orthosum {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPrime: return "NonPrime";
    case ErrorCode::EvenCharacteristic: return "EvenCharacteristic";
    case ErrorCode::BadDegree: return "BadDegree";
    case ErrorCode::FieldTooLarge: return "FieldTooLarge";
    case ErrorCode::DivideByZero: return "DivideByZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::BadShape: return "BadShape";
    case ErrorCode::DimensionTooSmall: return "DimensionTooSmall";
    case ErrorCode::ZeroFirstColumn: return "ZeroFirstColumn";
    case ErrorCode::DegenerateTriangle: return "DegenerateTriangle";
    case ErrorCode::IsotropicMirror: return "IsotropicMirror";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::UnrealizableInvariant: return "UnrealizableInvariant";
    case ErrorCode::AmbientTooLarge: return "AmbientTooLarge";
    case ErrorCode::SearchExhausted: return "SearchExhausted";
  }
  return "Unknown";
}

}  // namespace orthosum
