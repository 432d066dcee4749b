#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "semiarc/collineation.hpp"
#include "semiarc/constraints.hpp"
#include "semiarc/report.hpp"
#include "semiarc/search.hpp"
#include "semiarc/semiarc.hpp"

using namespace semiarc;
using nlohmann::json;

namespace {

constexpr int kExitInfeasible = 2;
constexpr int kExitVerifyFailed = 3;
constexpr int kExitIo = 4;

struct Global {
  int q = 0;
  std::string modulus;
  std::string out;
  std::string format = "json";
};

Plane make_plane(const Global& g) {
  if (g.q == 0) throw std::invalid_argument("--q is required");
  FieldSpec spec = default_field_spec(g.q);
  if (!g.modulus.empty()) {
    spec.modulus.clear();
    std::stringstream ss(g.modulus);
    std::string tok;
    while (std::getline(ss, tok, ',')) spec.modulus.push_back(std::stoi(tok));
  }
  return Plane(Field(spec));
}

PointSet read_points(const Plane& plane, const std::vector<std::string>& args) {
  std::vector<std::string> texts;
  for (const std::string& a : args)
    for (std::string& t : split_point_list(a)) texts.push_back(std::move(t));
  if (texts.empty()) throw std::invalid_argument("--points is empty");
  return parse_pointset(plane, texts);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

int cmd_plane(const Global& g, const std::string& list) {
  const Plane plane = make_plane(g);
  json j = {{"schema", kSchemaVersion},
            {"q", plane.q()},
            {"modulus", plane.field().spec().modulus},
            {"points", plane.size()},
            {"lines", plane.size()},
            {"points_per_line", plane.q() + 1}};
  if (list == "points") {
    j["point_list"] = json::array();
    for (int p = 0; p < plane.size(); ++p)
      j["point_list"].push_back({{"id", p}, {"coords", format_point(plane, static_cast<PointId>(p))}});
  } else if (list == "lines") {
    j["line_list"] = json::array();
    const Field& f = plane.field();
    for (int l = 0; l < plane.size(); ++l) {
      const Coords& c = plane.line(static_cast<LineId>(l));
      std::vector<int> pts(plane.points_on(static_cast<LineId>(l)).begin(), plane.points_on(static_cast<LineId>(l)).end());
      j["line_list"].push_back(
          {{"id", l}, {"coeffs", f.format(c[0]) + ":" + f.format(c[1]) + ":" + f.format(c[2])}, {"points", pts}});
    }
  } else if (!list.empty()) {
    throw std::invalid_argument("--list expects points or lines");
  }
  write_output(g.out, dump(j));
  return 0;
}

int cmd_verify(const Global& g, int t, const std::vector<std::string>& pts) {
  const Plane plane = make_plane(g);
  const PointSet s = read_points(plane, pts);
  const bool semi = is_t_semiarc(plane, s, t);
  const SecantDistribution x = secant_distribution(plane, s);
  json tangents = json::object();
  s.for_each([&](PointId p) { tangents[format_point(plane, p)] = tangent_count(plane, s, p); });
  json j = {{"schema", kSchemaVersion},
            {"q", plane.q()},
            {"t", t},
            {"size", s.size()},
            {"points", format_points(plane, s)},
            {"is_semiarc", semi},
            {"admissible", is_admissible(plane, s, t)},
            {"tangents", tangents},
            {"x", x},
            {"identities_hold", distribution_identities_hold(plane.q(), s.size(), x)}};
  j["design_check"] = semi ? json(design_check(plane, s, t)) : json(nullptr);
  if (semi) {
    const ClassificationRecord r = make_record(plane, s, GroupKind::kPgl);
    j["stab_pgl"] = r.stab_pgl.order;
    j["stab_pgammal"] = r.stab_pgammal.order;
  }
  if (g.format == "csv") {
    std::ostringstream out;
    out << "size";
    for (int i = 0; i <= plane.q() + 1; ++i) out << ",x" << i;
    out << ",is_semiarc\n" << s.size();
    for (int v : x) out << ',' << v;
    out << ',' << (semi ? "true" : "false") << '\n';
    write_output(g.out, out.str());
  } else {
    write_output(g.out, dump(j));
  }
  return semi ? 0 : kExitVerifyFailed;
}

int cmd_distributions(const Global& g, int s, int t, int max_len, const std::vector<std::string>& caps) {
  if (g.q == 0) throw std::invalid_argument("--q is required");
  default_field_spec(g.q);  // validates q
  if (max_len < 0) max_len = t >= g.q ? g.q + 1 : max_secant_length(g.q, t);
  std::map<int, int> cap_map;
  for (const std::string& c : caps) {
    const auto eq = c.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("--cap expects i=v, got '" + c + "'");
    cap_map[std::stoi(c.substr(0, eq))] = std::stoi(c.substr(eq + 1));
  }
  const auto rows = enumerate_secant_distributions(g.q, s, t, max_len, cap_map);
  if (g.format == "csv") {
    std::ostringstream out;
    for (int i = 0; i <= max_len; ++i) out << (i ? "," : "") << 'x' << i;
    out << '\n';
    for (const auto& r : rows) {
      for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << r[i];
      out << '\n';
    }
    write_output(g.out, out.str());
  } else {
    json j = {{"schema", kSchemaVersion}, {"q", g.q}, {"s", s}, {"t", t}, {"max_len", max_len},
              {"count", rows.size()}, {"rows", rows}};
    write_output(g.out, dump(j));
  }
  return rows.empty() ? kExitInfeasible : 0;
}

int cmd_stabilizer(const Global& g, const std::vector<std::string>& pts, const std::string& group) {
  const Plane plane = make_plane(g);
  const PointSet s = read_points(plane, pts);
  const GroupKind kind = parse_group_kind(group);
  const StabilizerReport rep = stabilizer(plane, s, kind);
  json j = stabilizer_json(rep);
  j["schema"] = kSchemaVersion;
  j["q"] = plane.q();
  j["group"] = group_kind_name(kind);
  j["points"] = format_points(plane, s);
  j["stab_pgl"] = kind == GroupKind::kPgl ? rep.order : stabilizer(plane, s, GroupKind::kPgl).order;
  j["stab_pgammal"] = kind == GroupKind::kPgammal ? rep.order : stabilizer(plane, s, GroupKind::kPgammal).order;
  write_output(g.out, dump(j));
  return 0;
}

int cmd_bounds(const Global& g) {
  if (g.q == 0) throw std::invalid_argument("--q is required");
  default_field_spec(g.q);
  const SizeBounds b = size_bounds(g.q);
  json sizes = json::array();
  for (int s = b.lower; s <= b.upper; ++s) {
    const FeasibilityVerdict v = size_feasibility(g.q, s);
    json e = {{"size", s}, {"feasible", v.feasible}, {"reason", v.reason}};
    if (v.witness) e["witness"] = {{"alpha", v.witness->first}, {"beta", v.witness->second}};
    sizes.push_back(e);
  }
  json j = {{"schema", kSchemaVersion}, {"q", g.q},      {"t", 2},
            {"lower", b.lower},         {"upper", b.upper}, {"max_secant_length", max_secant_length(g.q, 2)},
            {"sizes", sizes}};
  write_output(g.out, dump(j));
  return 0;
}

std::vector<int> parse_sizes(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    const auto dash = tok.find('-');
    if (dash != std::string::npos && dash > 0) {
      const int a = std::stoi(tok.substr(0, dash)), b = std::stoi(tok.substr(dash + 1));
      for (int s = a; s <= b; ++s) out.push_back(s);
    } else {
      out.push_back(std::stoi(tok));
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Semiarcs in PG(2,q): construction, verification and classification"};
  app.require_subcommand(1);
  app.fallthrough();
  Global g;
  app.add_option("--q", g.q, "Order of the plane (2,3,4,5,7,8,9,11,13)");
  app.add_option("--field-modulus", g.modulus, "Coefficients c0,...,ch of the field modulus");
  app.add_option("--out", g.out, "Output file (default stdout)");
  app.add_option("--format", g.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  auto* plane_cmd = app.add_subcommand("plane", "Dump the incidence structure");
  std::string list;
  plane_cmd->add_option("--list", list, "points or lines");

  auto* verify_cmd = app.add_subcommand("verify", "Check a point set for the t-semiarc property");
  int verify_t = 2;
  std::vector<std::string> verify_points;
  verify_cmd->add_option("--t", verify_t, "Tangents per point");
  verify_cmd->add_option("--points", verify_points, "Points a:b:c, separated by spaces, commas or semicolons")
      ->required();

  auto* dist_cmd = app.add_subcommand("distributions", "Solve for admissible secant distributions");
  int dist_s = 0, dist_t = 2, dist_max = -1;
  std::vector<std::string> dist_caps;
  dist_cmd->add_option("--s", dist_s, "Set size")->required();
  dist_cmd->add_option("--t", dist_t, "Tangents per point");
  dist_cmd->add_option("--max-len", dist_max, "Longest secant allowed");
  dist_cmd->add_option("--cap", dist_caps, "Upper bound i=v on x_i (repeatable)");

  auto* stab_cmd = app.add_subcommand("stabilizer", "Set stabilizer of a point set");
  std::vector<std::string> stab_points;
  std::string stab_group = "pgl";
  stab_cmd->add_option("--points", stab_points, "Points a:b:c")->required();
  stab_cmd->add_option("--group", stab_group, "pgl or pgammal");

  auto* classify_cmd = app.add_subcommand("classify", "Classify t-semiarcs up to projective equivalence");
  SearchConfig config;
  std::string sizes_text, group = "pgl";
  std::vector<std::string> no_prune;
  bool no_aug = false, timing = false;
  classify_cmd->add_option("--t", config.t, "Tangents per point");
  classify_cmd->add_option("--sizes", sizes_text, "Target sizes, e.g. 9,10,12-14");
  classify_cmd->add_option("--threshold", config.threshold_h, "Tree height before depth-first extension");
  classify_cmd->add_option("--budget", config.tree_budget, "Largest tree level kept when choosing the threshold");
  classify_cmd->add_option("--workers", config.workers, "Worker threads");
  classify_cmd->add_option("--group", group, "pgl or pgammal");
  classify_cmd->add_option("--no-prune", no_prune, "distribution, long-secant, structural or all (repeatable)");
  classify_cmd->add_flag("--no-augmentation", no_aug, "Deduplicate every level by canonical form instead");
  classify_cmd->add_flag("--long-run", config.long_run, "Allow full classifications for q >= 9");
  classify_cmd->add_option("--checkpoint", config.checkpoint_dir, "Directory for resumable progress");
  classify_cmd->add_option("--checkpoint-interval", config.checkpoint_interval_s, "Seconds between flushes");
  classify_cmd->add_flag("--timing", timing, "Include runtime, worker count and ISA in the report");

  app.add_subcommand("bounds", "Size bounds and divisibility feasibility for 2-semiarcs");

  CLI11_PARSE(app, argc, argv);

  try {
    if (plane_cmd->parsed()) return cmd_plane(g, list);
    if (verify_cmd->parsed()) return cmd_verify(g, verify_t, verify_points);
    if (dist_cmd->parsed()) return cmd_distributions(g, dist_s, dist_t, dist_max, dist_caps);
    if (stab_cmd->parsed()) return cmd_stabilizer(g, stab_points, stab_group);
    if (classify_cmd->parsed()) {
      const Plane plane = make_plane(g);
      config.group = parse_group_kind(group);
      config.size_targets = parse_sizes(sizes_text);
      config.augmentation = !no_aug;
      for (const std::string& p : no_prune) {
        if (p == "distribution") config.prune.distribution = false;
        else if (p == "long-secant") config.prune.long_secant = false;
        else if (p == "structural") config.prune.structural = false;
        else if (p == "all") config.prune = PruneFlags{false, false, false};
        else throw std::invalid_argument("unknown prune '" + p + "'");
      }
      const ClassificationReport rep = classify(plane, config);
      write_output(g.out, emit_report(plane, rep, parse_report_format(g.format), timing));
      return 0;
    }
    return cmd_bounds(g);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const InfeasibleConfig& e) {
    std::cerr << "infeasible: " << e.what() << '\n';
    return kExitInfeasible;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInfeasible;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
