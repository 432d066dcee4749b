#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "semiarc/search.hpp"

namespace semiarc {

inline constexpr int kSchemaVersion = 1;

// "a:b:c" with entries printed by Field::format.
std::string format_point(const Plane& plane, PointId p);
std::vector<std::string> format_points(const Plane& plane, const PointSet& s);

// Parses one homogeneous triple; throws std::invalid_argument with a hint.
PointId parse_point(const Plane& plane, std::string_view text);
// Normalized, deduplicated set.
PointSet parse_pointset(const Plane& plane, const std::vector<std::string>& texts);
// Splits a list on whitespace, commas and semicolons.
std::vector<std::string> split_point_list(std::string_view text);

enum class ReportFormat { kJson, kCsv };
ReportFormat parse_report_format(std::string_view text);

nlohmann::json stabilizer_json(const StabilizerReport& r);
nlohmann::json record_json(const Plane& plane, const ClassificationRecord& r, GroupKind group);
// Runtime and thread count are left out unless with_timing, so reports of the
// same classification compare byte for byte.
nlohmann::json report_json(const Plane& plane, const ClassificationReport& report, bool with_timing);
std::string report_csv(const Plane& plane, const ClassificationReport& report);
std::string emit_report(const Plane& plane, const ClassificationReport& report, ReportFormat format,
                        bool with_timing = false);

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Writes to path, or stdout for "" / "-". Throws IoError naming the path.
void write_output(const std::string& path, const std::string& content);

}  // namespace semiarc
