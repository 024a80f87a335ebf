// AVX2 kernel variants. This translation unit is compiled with -mavx2 and is
// only reached through the dispatch table after a CPUID check.

#include "domset/kernels.hpp"

#include <immintrin.h>

#include <bit>

namespace domset::kernels {
namespace {

// Per-byte popcount via nibble lookup, summed into four 64-bit lanes.
inline __m256i popcount_epi64(__m256i v) {
  const __m256i lookup = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,  //
                                          0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_nibbles = _mm256_set1_epi8(0x0f);
  const __m256i lo = _mm256_and_si256(v, low_nibbles);
  const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_nibbles);
  const __m256i bytes =
      _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo), _mm256_shuffle_epi8(lookup, hi));
  return _mm256_sad_epu8(bytes, _mm256_setzero_si256());
}

inline std::uint64_t horizontal_sum(__m256i v) {
  const __m128i sum = _mm_add_epi64(_mm256_castsi256_si128(v), _mm256_extracti128_si256(v, 1));
  return static_cast<std::uint64_t>(_mm_cvtsi128_si64(sum)) +
         static_cast<std::uint64_t>(_mm_extract_epi64(sum, 1));
}

inline __m256i load(const std::uint64_t* p) {
  return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

std::uint64_t count_covering_avx2(const std::uint64_t* columns, std::size_t stride,
                                  std::span<const MaskedWord> missing, std::size_t first,
                                  std::size_t last) {
  if (first >= last) return 0;
  if (missing.empty()) return last - first;

  std::uint64_t count = 0;
  std::size_t c = first;
  for (; c + 8 <= last; c += 8) {
    __m256i ok0 = _mm256_set1_epi64x(-1);
    __m256i ok1 = ok0;
    for (const MaskedWord& m : missing) {
      const std::uint64_t* col = columns + m.word * stride + c;
      const __m256i mask = _mm256_set1_epi64x(static_cast<long long>(m.mask));
      ok0 = _mm256_and_si256(ok0, _mm256_cmpeq_epi64(_mm256_and_si256(load(col), mask), mask));
      ok1 = _mm256_and_si256(ok1,
                             _mm256_cmpeq_epi64(_mm256_and_si256(load(col + 4), mask), mask));
      if (_mm256_testz_si256(ok0, ok0) && _mm256_testz_si256(ok1, ok1)) break;
    }
    const unsigned bits = static_cast<unsigned>(_mm256_movemask_pd(_mm256_castsi256_pd(ok0))) |
                          (static_cast<unsigned>(_mm256_movemask_pd(_mm256_castsi256_pd(ok1)))
                           << 4);
    count += static_cast<std::uint64_t>(std::popcount(bits));
  }
  for (; c < last; ++c) {
    bool covers = true;
    for (const MaskedWord& m : missing) {
      if ((columns[m.word * stride + c] & m.mask) != m.mask) {
        covers = false;
        break;
      }
    }
    count += covers ? 1 : 0;
  }
  return count;
}

void or_accumulate_avx2(std::uint64_t* acc, const std::uint64_t* src, std::size_t words) {
  std::size_t w = 0;
  for (; w + 4 <= words; w += 4) {
    const __m256i v = _mm256_or_si256(load(acc + w), load(src + w));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(acc + w), v);
  }
  for (; w < words; ++w) acc[w] |= src[w];
}

std::uint64_t popcount_and_avx2(const std::uint64_t* a, const std::uint64_t* b,
                                std::size_t words) {
  __m256i total = _mm256_setzero_si256();
  std::size_t w = 0;
  for (; w + 4 <= words; w += 4) {
    total = _mm256_add_epi64(total, popcount_epi64(_mm256_and_si256(load(a + w), load(b + w))));
  }
  std::uint64_t sum = horizontal_sum(total);
  for (; w < words; ++w) sum += std::popcount(a[w] & b[w]);
  return sum;
}

std::uint64_t popcount_andnot_avx2(const std::uint64_t* a, const std::uint64_t* b,
                                   std::size_t words) {
  __m256i total = _mm256_setzero_si256();
  std::size_t w = 0;
  for (; w + 4 <= words; w += 4) {
    // andnot(x, y) computes ~x & y
    total = _mm256_add_epi64(total, popcount_epi64(_mm256_andnot_si256(load(b + w), load(a + w))));
  }
  std::uint64_t sum = horizontal_sum(total);
  for (; w < words; ++w) sum += std::popcount(a[w] & ~b[w]);
  return sum;
}

}  // namespace

namespace detail {
const KernelTable avx2_table{
    Isa::avx2,
    &count_covering_avx2,
    &or_accumulate_avx2,
    &popcount_and_avx2,
    &popcount_andnot_avx2,
};
}  // namespace detail

}  // namespace domset::kernels
