#include "rotorqm/error.hpp"

namespace rotorqm {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::SuperluminalRim: return "SUPERLUMINAL_RIM";
    case ErrorCode::NonpositiveRadius: return "NONPOSITIVE_RADIUS";
    case ErrorCode::NonpositiveMass: return "NONPOSITIVE_MASS";
    case ErrorCode::InvalidArgument: return "INVALID_ARGUMENT";
    case ErrorCode::OrderOutOfRange: return "ORDER_OUT_OF_RANGE";
    case ErrorCode::NegativeArgument: return "NEGATIVE_ARGUMENT";
    case ErrorCode::IndexOutOfRange: return "INDEX_OUT_OF_RANGE";
    case ErrorCode::OpenPath: return "OPEN_PATH";
    case ErrorCode::DegeneratePath: return "DEGENERATE_PATH";
    case ErrorCode::UnsupportedClass: return "UNSUPPORTED_CLASS";
    case ErrorCode::ROutOfRange: return "R_OUT_OF_RANGE";
  }
  return "UNKNOWN";
}

}  // namespace rotorqm
