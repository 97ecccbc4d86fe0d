#include "airson/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "airson/error.hpp"

namespace airson {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split_csv(std::string_view line, int line_no) {
  std::vector<std::string> cells;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      cells.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (quoted) throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": unterminated quote");
  cells.push_back(trim(cur));
  return cells;
}

[[noreturn]] void fail(int line_no, const std::string& msg) {
  throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": " + msg);
}

double parse_number(const std::string& cell, int line_no, std::string_view column) {
  double v = 0.0;
  const auto* end = cell.data() + cell.size();
  const auto [ptr, ec] = std::from_chars(cell.data(), end, v);
  if (ec != std::errc{} || ptr != end) {
    fail(line_no, "column " + std::string(column) + ": '" + cell + "' is not a number");
  }
  return v;
}

std::optional<double> optional_number(const std::string& cell, int line_no, std::string_view column) {
  if (cell.empty()) return std::nullopt;
  return parse_number(cell, line_no, column);
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

Endurance parse_endurance(const std::string& cell, int line_no) {
  if (cell.empty()) return endurance::Unknown{};
  const std::string l = lower(cell);
  if (l == "tethered") return endurance::Tethered{};
  if (const auto pos = l.find("year"); pos != std::string::npos) {
    const std::string num = trim(std::string_view(cell).substr(0, pos));
    const double years = parse_number(num, line_no, "endurance");
    if (!(years > 0.0)) fail(line_no, "endurance must be > 0");
    return endurance::Years{years};
  }
  const double hours = parse_number(cell, line_no, "endurance");
  if (!(hours > 0.0)) fail(line_no, "endurance must be > 0");
  return endurance::Hours{hours};
}

std::optional<Layer> layer_from_heading(std::string_view heading) {
  const std::string h(heading);
  if (h.find("LAP") != std::string::npos) return Layer::Lower;
  if (h.find("MAP") != std::string::npos) return Layer::Medium;
  if (h.find("HAP") != std::string::npos) return Layer::Higher;
  return std::nullopt;
}

}  // namespace

std::vector<PlatformRecord> parse_platform_catalog(std::string_view text) {
  std::vector<PlatformRecord> out;
  std::optional<Layer> layer;
  bool header_seen = false;
  int line_no = 0;

  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == '#') {
      if (auto l = layer_from_heading(line)) layer = l;
      continue;
    }
    if (!header_seen) {
      if (line != kCatalogHeader) fail(line_no, "expected header '" + std::string(kCatalogHeader) + "'");
      header_seen = true;
      continue;
    }

    const auto cells = split_csv(line, line_no);
    if (cells.size() != 10) {
      fail(line_no, "expected 10 columns, found " + std::to_string(cells.size()));
    }
    PlatformRecord r;
    r.name = cells[0];
    if (r.name.empty()) fail(line_no, "empty platform name");

    if (cells[1].size() != 1) fail(line_no, "kind must be one of S/P/B/C");
    switch (cells[1][0]) {
      case 'S': r.kind = AirframeKind::Airship; break;
      case 'P': r.kind = AirframeKind::Airplane; break;
      case 'B': r.kind = AirframeKind::Balloon; break;
      case 'C': r.kind = AirframeKind::Copter; break;
      default: fail(line_no, "kind must be one of S/P/B/C");
    }
    if (cells[2] == "M") {
      r.crewing = Crewing::Manned;
    } else if (cells[2] == "U") {
      r.crewing = Crewing::Unmanned;
    } else {
      fail(line_no, "crewing must be M or U");
    }

    r.max_altitude_m = optional_number(cells[3], line_no, "max_altitude_m");
    if (r.max_altitude_m && !(*r.max_altitude_m > 0.0)) fail(line_no, "max_altitude_m must be > 0");
    r.length_m = optional_number(cells[4], line_no, "length_m");
    r.wingspan_m = optional_number(cells[5], line_no, "wingspan_m");
    r.weight_kg = optional_number(cells[6], line_no, "weight_kg");
    if (lower(cells[7]) == "fixed") {
      r.range_km = FixedRange{};
    } else if (auto km = optional_number(cells[7], line_no, "range_km")) {
      r.range_km = *km;
    }
    r.payload_kg = optional_number(cells[8], line_no, "payload_kg");
    r.endurance = parse_endurance(cells[9], line_no);
    r.layer = layer;
    out.push_back(std::move(r));
  }
  if (!header_seen) fail(line_no, "missing header");
  return out;
}

std::vector<PlatformRecord> load_platform_catalog(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open catalog " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_platform_catalog(buf.str());
}

const PlatformRecord* find_platform(const std::vector<PlatformRecord>& catalog,
                                    std::string_view name) {
  const auto it = std::find_if(catalog.begin(), catalog.end(),
                               [&](const PlatformRecord& r) { return r.name == name; });
  return it == catalog.end() ? nullptr : &*it;
}

std::optional<double> endurance_hours(const Endurance& e) {
  if (const auto* h = std::get_if<endurance::Hours>(&e)) return h->value;
  if (const auto* y = std::get_if<endurance::Years>(&e)) return y->value * 365.25 * 24.0;
  return std::nullopt;
}

char to_char(AirframeKind k) {
  switch (k) {
    case AirframeKind::Airship: return 'S';
    case AirframeKind::Airplane: return 'P';
    case AirframeKind::Balloon: return 'B';
    case AirframeKind::Copter: return 'C';
  }
  return '?';
}

char to_char(Crewing c) { return c == Crewing::Manned ? 'M' : 'U'; }

std::string_view to_string(Layer l) {
  switch (l) {
    case Layer::Lower: return "LAP";
    case Layer::Medium: return "MAP";
    case Layer::Higher: return "HAP";
  }
  return "?";
}

}  // namespace airson
