#include "semiarc/report.hpp"

#include <algorithm>
#include <cerrno>
#include <cstring>
#include <fstream>
#include <iostream>
#include <sstream>

namespace semiarc {

std::string format_point(const Plane& plane, PointId p) {
  const Coords& c = plane.point(p);
  const Field& f = plane.field();
  return f.format(c[0]) + ":" + f.format(c[1]) + ":" + f.format(c[2]);
}

std::vector<std::string> format_points(const Plane& plane, const PointSet& s) {
  std::vector<std::string> out;
  s.for_each([&](PointId p) { out.push_back(format_point(plane, p)); });
  return out;
}

PointId parse_point(const Plane& plane, std::string_view text) {
  if (std::count(text.begin(), text.end(), ':') != 2)
    throw std::invalid_argument("malformed point '" + std::string(text) + "': expected a:b:c");
  Coords c{};
  std::size_t start = 0;
  for (int i = 0; i < 3; ++i) {
    const std::size_t end = i < 2 ? text.find(':', start) : text.size();
    c[i] = plane.field().parse(text.substr(start, end - start));
    start = end + 1;
  }
  if (c[0] == 0 && c[1] == 0 && c[2] == 0)
    throw std::invalid_argument("'" + std::string(text) + "' is the zero triple, not a point");
  return plane.point_id(c);
}

PointSet parse_pointset(const Plane& plane, const std::vector<std::string>& texts) {
  PointSet s;
  for (const std::string& t : texts) s.insert(parse_point(plane, t));
  return s;
}

std::vector<std::string> split_point_list(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (ch == ',' || ch == ';' || ch == ' ' || ch == '\t' || ch == '\n') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

ReportFormat parse_report_format(std::string_view text) {
  if (text == "json") return ReportFormat::kJson;
  if (text == "csv") return ReportFormat::kCsv;
  throw std::invalid_argument("unknown format '" + std::string(text) + "' (expected json or csv)");
}

nlohmann::json stabilizer_json(const StabilizerReport& r) {
  nlohmann::json j = {{"order", r.order}};
  if (r.profile_complete) {
    nlohmann::json prof = nlohmann::json::object();
    for (const auto& [ord, cnt] : r.profile) prof[std::to_string(ord)] = cnt;
    j["element_orders"] = prof;
  }
  j["name"] = r.name ? nlohmann::json(*r.name) : nlohmann::json(nullptr);
  return j;
}

nlohmann::json record_json(const Plane& plane, const ClassificationRecord& r, GroupKind group) {
  const StabilizerReport& own = group == GroupKind::kPgl ? r.stab_pgl : r.stab_pgammal;
  nlohmann::json j = {{"size", r.size},
                      {"points", format_points(plane, r.points)},
                      {"x", r.x},
                      {"stab_pgl", r.stab_pgl.order},
                      {"stab_pgammal", r.stab_pgammal.order},
                      {"stabilizer_pgl", stabilizer_json(r.stab_pgl)},
                      {"stabilizer_pgammal", stabilizer_json(r.stab_pgammal)}};
  if (own.name) j["name"] = *own.name;
  return j;
}

namespace {
const char* outcome_name(SizeOutcome o) {
  switch (o) {
    case SizeOutcome::kFound: return "found";
    case SizeOutcome::kNone: return "none";
    case SizeOutcome::kExcluded: return "excluded";
  }
  return "";
}
}  // namespace

nlohmann::json report_json(const Plane& plane, const ClassificationReport& report, bool with_timing) {
  nlohmann::json j;
  j["schema"] = kSchemaVersion;
  j["q"] = report.q;
  j["t"] = report.t;
  j["group_kind"] = group_kind_name(report.group);
  j["modulus"] = plane.field().spec().modulus;
  j["records"] = nlohmann::json::array();
  for (const auto& r : report.records) j["records"].push_back(record_json(plane, r, report.group));
  nlohmann::json counts = nlohmann::json::object();
  for (const auto& [size, n] : report.counts()) counts[std::to_string(size)] = n;
  j["counts"] = counts;
  j["sizes"] = nlohmann::json::array();
  for (const SizeStatus& st : report.sizes) {
    nlohmann::json s = {{"size", st.size}, {"status", outcome_name(st.outcome)}};
    if (!st.reason.empty()) s["reason"] = st.reason;
    j["sizes"].push_back(s);
  }
  const SearchStats& s = report.stats;
  nlohmann::json stats = {{"threshold", s.threshold},
                          {"tree_level_counts", s.tree_level_counts},
                          {"nodes", s.nodes},
                          {"children_tested", s.children_tested},
                          {"labelings", s.labelings},
                          {"pruned",
                           {{"long_secant", s.pruned_long_secant},
                            {"structural", s.pruned_structural},
                            {"distribution", s.pruned_distribution}}}};
  if (!s.labeled_counts.empty()) {
    nlohmann::json lc = nlohmann::json::object();
    for (const auto& [size, n] : s.labeled_counts) lc[std::to_string(size)] = n;
    stats["labeled_counts"] = lc;
  }
  if (with_timing) {
    stats["seconds"] = s.seconds;
    stats["workers"] = s.workers;
    stats["isa"] = s.isa;
    stats["resumed_reps"] = s.resumed_reps;
  }
  j["stats"] = stats;
  return j;
}

std::string report_csv(const Plane& plane, const ClassificationReport& report) {
  std::ostringstream out;
  const int q = plane.q();
  out << "size";
  for (int i = 0; i <= q + 1; ++i) out << ",x" << i;
  out << ",stab_pgl,stab_pgammal,name\n";
  for (const auto& r : report.records) {
    out << r.size;
    for (int v : r.x) out << ',' << v;
    const StabilizerReport& own = report.group == GroupKind::kPgl ? r.stab_pgl : r.stab_pgammal;
    out << ',' << r.stab_pgl.order << ',' << r.stab_pgammal.order << ',';
    if (own.name) out << '"' << *own.name << '"';
    out << '\n';
  }
  return out.str();
}

std::string emit_report(const Plane& plane, const ClassificationReport& report, ReportFormat format,
                        bool with_timing) {
  if (format == ReportFormat::kCsv) return report_csv(plane, report);
  return report_json(plane, report, with_timing).dump(2) + "\n";
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    std::cout.flush();
    if (!std::cout) throw IoError("cannot write to standard output");
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing: " + std::strerror(errno));
  out << content;
  out.close();
  if (!out) throw IoError("failed writing '" + path + "'");
}

}  // namespace semiarc
