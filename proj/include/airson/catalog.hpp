#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace airson {

enum class AirframeKind { Airship, Airplane, Balloon, Copter };  // S, P, B, C
enum class Crewing { Manned, Unmanned };
enum class Layer { Lower, Medium, Higher };

namespace endurance {
struct Hours {
  double value;
  bool operator==(const Hours&) const = default;
};
struct Tethered {
  bool operator==(const Tethered&) const = default;
};
struct Years {
  double value;
  bool operator==(const Years&) const = default;
};
struct Unknown {
  bool operator==(const Unknown&) const = default;
};
}  // namespace endurance

using Endurance = std::variant<endurance::Hours, endurance::Tethered, endurance::Years,
                               endurance::Unknown>;

/// Range column: a distance, or "Fixed" for tethered platforms.
struct FixedRange {
  bool operator==(const FixedRange&) const = default;
};
using Range = std::variant<double, FixedRange>;

struct PlatformRecord {
  std::string name;
  AirframeKind kind = AirframeKind::Copter;
  Crewing crewing = Crewing::Unmanned;
  std::optional<double> max_altitude_m;
  std::optional<double> length_m;
  std::optional<double> wingspan_m;
  std::optional<double> weight_kg;
  std::optional<Range> range_km;
  std::optional<double> payload_kg;
  Endurance endurance = endurance::Unknown{};
  /// From the most recent "# ... LAP/MAP/HAP" heading line, if any.
  std::optional<Layer> layer;
};

inline constexpr std::string_view kCatalogHeader =
    "name,kind,crewing,max_altitude_m,length_m,wingspan_m,weight_kg,range_km,payload_kg,endurance";

/// Parses the platform catalog CSV. Lines starting with '#' are comments; a
/// comment mentioning LAP, MAP or HAP sets the layer of the rows that follow.
/// Throws Error{Parse} naming the 1-based line number, or Error{Io}.
std::vector<PlatformRecord> load_platform_catalog(const std::filesystem::path& path);
std::vector<PlatformRecord> parse_platform_catalog(std::string_view text);

const PlatformRecord* find_platform(const std::vector<PlatformRecord>& catalog,
                                    std::string_view name);

/// Hours airborne, or nullopt when the platform never runs out (tethered) or
/// the value is unknown.
std::optional<double> endurance_hours(const Endurance& e);

char to_char(AirframeKind k);
char to_char(Crewing c);
std::string_view to_string(Layer l);

}  // namespace airson
