#pragma once

// Bitmask kernels used by the counting engine and the solver.
//
// Every kernel has a portable scalar reference and, on x86-64, an AVX2 variant.
// The active variant is chosen once at startup from CPUID and may be overridden
// (tests run both and compare results word for word).

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace domset::kernels {

enum class Isa { scalar, avx2 };

/// One word of a "still uncovered" mask: candidates must contain all of `mask`
/// in word `word` of their row.
struct MaskedWord {
  std::uint32_t word;
  std::uint64_t mask;
};

struct KernelTable {
  Isa isa;

  /// Number of candidates c in [first, last) whose row covers every MaskedWord.
  /// `columns` is column-major: word w of candidate c is columns[w * stride + c].
  std::uint64_t (*count_covering)(const std::uint64_t* columns, std::size_t stride,
                                  std::span<const MaskedWord> missing, std::size_t first,
                                  std::size_t last);

  /// acc |= src over `words` words.
  void (*or_accumulate)(std::uint64_t* acc, const std::uint64_t* src, std::size_t words);

  /// popcount(a & b) over `words` words.
  std::uint64_t (*popcount_and)(const std::uint64_t* a, const std::uint64_t* b,
                                std::size_t words);

  /// popcount(a & ~b) over `words` words.
  std::uint64_t (*popcount_andnot)(const std::uint64_t* a, const std::uint64_t* b,
                                   std::size_t words);
};

bool isa_supported(Isa isa);
Isa detect_isa();

const KernelTable& table(Isa isa);

/// Kernel table used by default across the library.
const KernelTable& active();
/// Force a variant; throws std::invalid_argument if unsupported on this CPU.
void set_active(Isa isa);

std::string_view isa_name(Isa isa);
Isa parse_isa(std::string_view name);  // "scalar" | "avx2" | "auto"

namespace detail {
extern const KernelTable scalar_table;
#if defined(DOMSET_HAVE_AVX2)
extern const KernelTable avx2_table;
#endif
}  // namespace detail

}  // namespace domset::kernels
