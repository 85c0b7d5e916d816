#include "stardis/kernels/box_count.hpp"

#if defined(STARDIS_HAVE_AVX2)

#include <immintrin.h>

#include <bit>

namespace stardis::kernels {

// Four points per iteration. Membership masks for the closed and open
// predicates are ANDed across axes, then popcounted from the sign bits.
// Only comparisons are performed, so counts match the scalar variant bit
// for bit on any input.
BoxCount box_count_avx2(const double* coords, std::size_t n, std::size_t d,
                        const double* corner) noexcept {
  BoxCount out;
  const __m256d ones = _mm256_castsi256_pd(_mm256_set1_epi64x(-1));
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d le = ones;
    __m256d lt = ones;
    for (std::size_t j = 0; j < d; ++j) {
      const __m256d p = _mm256_loadu_pd(coords + j * n + i);
      const __m256d x = _mm256_set1_pd(corner[j]);
      le = _mm256_and_pd(le, _mm256_cmp_pd(p, x, _CMP_LE_OQ));
      lt = _mm256_and_pd(lt, _mm256_cmp_pd(p, x, _CMP_LT_OQ));
    }
    out.closed += std::popcount(static_cast<unsigned>(_mm256_movemask_pd(le)));
    out.open += std::popcount(static_cast<unsigned>(_mm256_movemask_pd(lt)));
  }
  for (; i < n; ++i) {
    bool le = true;
    bool lt = true;
    for (std::size_t j = 0; j < d; ++j) {
      const double c = coords[j * n + i];
      const double x = corner[j];
      le = le && (c <= x);
      lt = lt && (c < x);
      if (!le) break;
    }
    out.closed += le ? 1 : 0;
    out.open += lt ? 1 : 0;
  }
  return out;
}

}  // namespace stardis::kernels

#endif  // STARDIS_HAVE_AVX2
