#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "semiarc/collineation.hpp"
#include "semiarc/semiarc.hpp"

namespace semiarc {

struct PruneFlags {
  bool distribution = true;  // secant-distribution caps per target size
  bool long_secant = true;   // no over-long secants; union of two (q-t)-secants
  bool structural = true;    // tangent deficits and available-point window
};

struct SearchConfig {
  int t = 2;
  // Empty selects every size that survives the bound and feasibility filters.
  std::vector<int> size_targets;
  // 0 picks the largest level (<= the smallest target) whose representative
  // count stays within tree_budget.
  int threshold_h = 0;
  std::uint64_t tree_budget = 1000000;
  GroupKind group = GroupKind::kPgl;
  int workers = 1;
  PruneFlags prune;
  // Canonical augmentation; when false every level is deduplicated by
  // canonical form instead (slow, for cross-checks).
  bool augmentation = true;
  // Required for a full (no --sizes) classification with q >= 9.
  bool long_run = false;
  std::string checkpoint_dir;
  double checkpoint_interval_s = 60.0;
};

struct ClassificationRecord {
  PointSet points;  // canonical form under the run's group
  int size = 0;
  SecantDistribution x;
  StabilizerReport stab_pgl;
  StabilizerReport stab_pgammal;
};

enum class SizeOutcome { kFound, kNone, kExcluded };

struct SizeStatus {
  int size = 0;
  SizeOutcome outcome = SizeOutcome::kNone;
  std::string reason;
};

struct SearchStats {
  int threshold = 0;
  int workers = 1;
  std::vector<std::uint64_t> tree_level_counts;  // index k-1 for level k
  std::uint64_t nodes = 0;                       // accepted nodes beyond the threshold
  std::uint64_t children_tested = 0;
  std::uint64_t labelings = 0;
  std::uint64_t pruned_long_secant = 0;
  std::uint64_t pruned_structural = 0;
  std::uint64_t pruned_distribution = 0;
  std::uint64_t resumed_reps = 0;
  std::map<int, std::uint64_t> labeled_counts;  // brute force only
  double seconds = 0.0;
  std::string isa;
};

struct ClassificationReport {
  int q = 0;
  int t = 2;
  GroupKind group = GroupKind::kPgl;
  std::vector<ClassificationRecord> records;  // sorted by (size, points)
  std::vector<SizeStatus> sizes;
  SearchStats stats;

  std::map<int, int> counts() const;
};

// The configuration admits no size to search.
class InfeasibleConfig : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Target sizes after filtering, with the excluded ones and their reasons.
std::vector<SizeStatus> plan_sizes(const Plane& plane, const SearchConfig& config);

ClassificationRecord make_record(const Plane& plane, const PointSet& s, GroupKind group);

// Admissible sets of sizes 1..h, one per equivalence class and level.
std::vector<std::vector<PointSet>> generate_admissible_tree(const Plane& plane, int t, int h, GroupKind group);

ClassificationReport classify(const Plane& plane, const SearchConfig& config);

// Independent oracle: subset enumeration plus explicit-group orbit marking.
// Refuses q > 5.
ClassificationReport brute_force_classify(const Plane& plane, int t, int max_size, GroupKind group);

}  // namespace semiarc
