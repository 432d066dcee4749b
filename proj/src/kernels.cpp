#include "semiarc/kernels.hpp"

#include <cstdlib>

namespace semiarc::kernels {

void line_counts_scalar(std::span<const PointSet> lines, const PointSet& set, std::span<std::uint8_t> counts) {
  for (std::size_t l = 0; l < lines.size(); ++l) counts[l] = static_cast<std::uint8_t>(lines[l].intersection_size(set));
}

namespace {

Isa detect() {
  const char* force = std::getenv("SEMIARC_FORCE_SCALAR");
  if (force && *force && *force != '0') return Isa::kScalar;
#if SEMIARC_HAVE_AVX2
  __builtin_cpu_init();
  if (__builtin_cpu_supports("avx2")) return Isa::kAvx2;
#endif
  return Isa::kScalar;
}

}  // namespace

Isa active_isa() {
  static const Isa isa = detect();
  return isa;
}

const char* isa_name(Isa isa) { return isa == Isa::kAvx2 ? "avx2" : "scalar"; }

void line_counts(std::span<const PointSet> lines, const PointSet& set, std::span<std::uint8_t> counts) {
#if SEMIARC_HAVE_AVX2
  if (active_isa() == Isa::kAvx2) {
    line_counts_avx2(lines, set, counts);
    return;
  }
#endif
  line_counts_scalar(lines, set, counts);
}

}  // namespace semiarc::kernels
