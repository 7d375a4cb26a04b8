#include "hat/error.hpp"

namespace hat {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::DomainMismatch: return "DomainMismatch";
    case Errc::PointOutOfRange: return "PointOutOfRange";
    case Errc::NotASubgroup: return "NotASubgroup";
    case Errc::PartitionNotInvariant: return "PartitionNotInvariant";
    case Errc::BadParameter: return "BadParameter";
    case Errc::NotContained: return "NotContained";
    case Errc::NoOrientation: return "NoOrientation";
    case Errc::NotInOG4: return "NotInOG4";
    case Errc::NotNormal: return "NotNormal";
    case Errc::NotACycle: return "NotACycle";
    case Errc::ConditionsViolated: return "ConditionsViolated";
    case Errc::UnidentifiedQuotient: return "UnidentifiedQuotient";
    case Errc::InvalidOrientation: return "InvalidOrientation";
    case Errc::NotHalfArcTransitive: return "NotHalfArcTransitive";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace hat
