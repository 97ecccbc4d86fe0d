#include "airson/error.hpp"

namespace airson {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidConfig: return "InvalidConfig";
    case ErrorKind::InvalidFraction: return "InvalidFraction";
    case ErrorKind::HotspotOutsideRegion: return "HotspotOutsideRegion";
    case ErrorKind::Io: return "IoError";
    case ErrorKind::Schema: return "SchemaError";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::DegenerateDistance: return "DegenerateDistance";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::SpacingTooLarge: return "SpacingTooLarge";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::UnknownPlatform: return "UnknownPlatform";
    case ErrorKind::EventIndexInvalid: return "EventIndexInvalid";
  }
  return "Unknown";
}

}  // namespace airson
