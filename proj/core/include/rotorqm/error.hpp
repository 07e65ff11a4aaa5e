#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rotorqm {

enum class ErrorCode {
  SuperluminalRim,
  NonpositiveRadius,
  NonpositiveMass,
  InvalidArgument,
  OrderOutOfRange,
  NegativeArgument,
  IndexOutOfRange,
  OpenPath,
  DegeneratePath,
  UnsupportedClass,
  ROutOfRange,
};

/// Stable upper-case identifier, e.g. "SUPERLUMINAL_RIM". Used in CLI error records.
std::string_view error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace rotorqm
