#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hat {

enum class Errc {
  CapExceeded,
  DomainMismatch,
  PointOutOfRange,
  NotASubgroup,
  PartitionNotInvariant,
  BadParameter,
  NotContained,
  NoOrientation,
  NotInOG4,
  NotNormal,
  NotACycle,
  ConditionsViolated,
  UnidentifiedQuotient,
  InvalidOrientation,
  NotHalfArcTransitive,
};

std::string_view to_string(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace hat
