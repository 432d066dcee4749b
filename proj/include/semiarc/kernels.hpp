#pragma once

#include <cstdint>
#include <span>

#include "semiarc/point_set.hpp"

namespace semiarc::kernels {

enum class Isa { kScalar, kAvx2 };

// counts[l] = |lines[l] & set| for every line. counts.size() >= lines.size().
void line_counts_scalar(std::span<const PointSet> lines, const PointSet& set, std::span<std::uint8_t> counts);
#if SEMIARC_HAVE_AVX2
void line_counts_avx2(std::span<const PointSet> lines, const PointSet& set, std::span<std::uint8_t> counts);
#endif

// Picks AVX2 when the CPU supports it unless SEMIARC_FORCE_SCALAR is set in
// the environment. The choice is made once per process.
Isa active_isa();
const char* isa_name(Isa isa);
void line_counts(std::span<const PointSet> lines, const PointSet& set, std::span<std::uint8_t> counts);

}  // namespace semiarc::kernels
