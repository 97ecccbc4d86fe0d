#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace airson {

enum class ErrorKind {
  InvalidConfig,
  InvalidFraction,
  HotspotOutsideRegion,
  Io,
  Schema,
  Parse,
  DegenerateDistance,
  DimensionMismatch,
  SpacingTooLarge,
  BudgetExceeded,
  UnknownPlatform,
  EventIndexInvalid,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries a kind so callers (the CLI in
/// particular) can map it onto a stable exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace airson
