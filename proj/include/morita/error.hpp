#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace morita {

/// Failure categories raised by the library. Values marked "bug-level"
/// can only be reached if an internal cross-check disagrees.
enum class Errc {
  InvalidArgument,
  ZeroDenominator,
  NonSimplePoles,
  DegreeError,
  NotMonicInteger,
  NonInteger,            // bug-level when raised from a_coefficients
  WeightMismatch,
  TrivialPartition,
  InternalDisagreement,  // bug-level
  RouteDisagreement,     // bug-level
  InternalDivisibility,  // bug-level
  SingularMatrix,
  NotSymplectic,
  OrderCapExceeded,
  MalformedFile,
  DimensionOdd,
};

std::string_view to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace morita
