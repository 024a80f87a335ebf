#include "domset/kernels.hpp"

#include <bit>

namespace domset::kernels {
namespace {

std::uint64_t count_covering_scalar(const std::uint64_t* columns, std::size_t stride,
                                    std::span<const MaskedWord> missing, std::size_t first,
                                    std::size_t last) {
  if (first >= last) return 0;
  if (missing.empty()) return last - first;
  std::uint64_t count = 0;
  for (std::size_t c = first; c < last; ++c) {
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

void or_accumulate_scalar(std::uint64_t* acc, const std::uint64_t* src, std::size_t words) {
  for (std::size_t w = 0; w < words; ++w) acc[w] |= src[w];
}

std::uint64_t popcount_and_scalar(const std::uint64_t* a, const std::uint64_t* b,
                                  std::size_t words) {
  std::uint64_t total = 0;
  for (std::size_t w = 0; w < words; ++w) total += std::popcount(a[w] & b[w]);
  return total;
}

std::uint64_t popcount_andnot_scalar(const std::uint64_t* a, const std::uint64_t* b,
                                     std::size_t words) {
  std::uint64_t total = 0;
  for (std::size_t w = 0; w < words; ++w) total += std::popcount(a[w] & ~b[w]);
  return total;
}

}  // namespace

namespace detail {
const KernelTable scalar_table{
    Isa::scalar,
    &count_covering_scalar,
    &or_accumulate_scalar,
    &popcount_and_scalar,
    &popcount_andnot_scalar,
};
}  // namespace detail

}  // namespace domset::kernels
