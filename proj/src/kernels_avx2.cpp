// Built with -mavx2; only reached after a runtime CPU check.
#include "qsdl/kernels.hpp"

#include <immintrin.h>

namespace qsdl::kernels::avx2 {

void gather_u32(const std::uint32_t *table, const std::uint32_t *idx, std::uint32_t *out,
                std::size_t n) {
  std::size_t i = 0;
  const int *base = reinterpret_cast<const int *>(table);
  for (; i + 8 <= n; i += 8) {
    __m256i vi = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(idx + i));
    __m256i g = _mm256_i32gather_epi32(base, vi, 4);
    _mm256_storeu_si256(reinterpret_cast<__m256i *>(out + i), g);
  }
  for (; i < n; ++i) out[i] = table[idx[i]];
}

// Nibble lookup popcount (Mula, Kurz, Lemire): per-byte counts from two
// shuffles, summed into 64-bit lanes with SAD against zero.
std::uint64_t popcount_and(const std::uint64_t *a, const std::uint64_t *b, std::size_t n) {
  const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                       0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low = _mm256_set1_epi8(0x0f);
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(b + i));
    __m256i x = _mm256_and_si256(va, vb);
    __m256i lo = _mm256_shuffle_epi8(lut, _mm256_and_si256(x, low));
    __m256i hi = _mm256_shuffle_epi8(lut, _mm256_and_si256(_mm256_srli_epi16(x, 4), low));
    acc = _mm256_add_epi64(acc, _mm256_sad_epu8(_mm256_add_epi8(lo, hi), _mm256_setzero_si256()));
  }
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i *>(lanes), acc);
  std::uint64_t c = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  for (; i < n; ++i) c += static_cast<std::uint64_t>(__builtin_popcountll(a[i] & b[i]));
  return c;
}

}  // namespace qsdl::kernels::avx2
