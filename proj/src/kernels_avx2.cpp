#include "semiarc/kernels.hpp"

#if SEMIARC_HAVE_AVX2

#include <immintrin.h>

namespace semiarc::kernels {

// Nibble-table popcount of each AND'ed line mask, summed per 64-bit lane by
// vpsadbw and then across the four lanes.
__attribute__((target("avx2"))) void line_counts_avx2(std::span<const PointSet> lines, const PointSet& set,
                                                      std::span<std::uint8_t> counts) {
  const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4, 0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2,
                                       3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  const __m256i s = _mm256_load_si256(reinterpret_cast<const __m256i*>(set.words().data()));
  const std::size_t n = lines.size();
  std::size_t l = 0;
  for (; l + 4 <= n; l += 4) {
    __m256i acc[4];
    for (int k = 0; k < 4; ++k) {
      const __m256i v =
          _mm256_and_si256(_mm256_load_si256(reinterpret_cast<const __m256i*>(lines[l + k].words().data())), s);
      const __m256i lo = _mm256_shuffle_epi8(lut, _mm256_and_si256(v, low_mask));
      const __m256i hi = _mm256_shuffle_epi8(lut, _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask));
      acc[k] = _mm256_sad_epu8(_mm256_add_epi8(lo, hi), _mm256_setzero_si256());
    }
    // Each acc[k] holds four 64-bit partial sums; fold them to one count per line.
    const __m256i ab = _mm256_add_epi64(_mm256_unpacklo_epi64(acc[0], acc[1]), _mm256_unpackhi_epi64(acc[0], acc[1]));
    const __m256i cd = _mm256_add_epi64(_mm256_unpacklo_epi64(acc[2], acc[3]), _mm256_unpackhi_epi64(acc[2], acc[3]));
    // ab = [a0 b0 | a1 b1], cd = [c0 d0 | c1 d1] over the two 128-bit halves.
    const __m256i lo = _mm256_permute2x128_si256(ab, cd, 0x20);
    const __m256i hi = _mm256_permute2x128_si256(ab, cd, 0x31);
    const __m256i sum = _mm256_add_epi64(lo, hi);  // [a b c d]
    alignas(32) std::uint64_t out[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(out), sum);
    for (int k = 0; k < 4; ++k) counts[l + k] = static_cast<std::uint8_t>(out[k]);
  }
  for (; l < n; ++l) counts[l] = static_cast<std::uint8_t>(lines[l].intersection_size(set));
}

}  // namespace semiarc::kernels

#endif
