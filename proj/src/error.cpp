#include "morita/error.hpp"

namespace morita {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::ZeroDenominator: return "ZeroDenominator";
    case Errc::NonSimplePoles: return "NonSimplePoles";
    case Errc::DegreeError: return "DegreeError";
    case Errc::NotMonicInteger: return "NotMonicInteger";
    case Errc::NonInteger: return "NonInteger";
    case Errc::WeightMismatch: return "WeightMismatch";
    case Errc::TrivialPartition: return "TrivialPartition";
    case Errc::InternalDisagreement: return "InternalDisagreement";
    case Errc::RouteDisagreement: return "RouteDisagreement";
    case Errc::InternalDivisibility: return "InternalDivisibility";
    case Errc::SingularMatrix: return "SingularMatrix";
    case Errc::NotSymplectic: return "NotSymplectic";
    case Errc::OrderCapExceeded: return "OrderCapExceeded";
    case Errc::MalformedFile: return "MalformedFile";
    case Errc::DimensionOdd: return "DimensionOdd";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace morita
