// Scalar and SIMD kernels must agree bit for bit on arbitrary inputs.

#include <doctest.h>

#include <bit>
#include <vector>

#include "domset/engine.hpp"
#include "domset/generators.hpp"
#include "domset/kernels.hpp"
#include "domset/prng.hpp"

using namespace domset;
using namespace domset::kernels;

namespace {

std::vector<std::uint64_t> random_words(SplitMix64& rng, std::size_t count, int density) {
  std::vector<std::uint64_t> out(count);
  for (auto& w : out) {
    w = ~std::uint64_t{0};
    for (int i = 0; i < density; ++i) w &= rng.next();
  }
  return out;
}

struct IsaGuard {
  Isa saved = active().isa;
  ~IsaGuard() { set_active(saved); }
};

}  // namespace

TEST_CASE("scalar kernel is always available") {
  CHECK(isa_supported(Isa::scalar));
  CHECK(table(Isa::scalar).isa == Isa::scalar);
  CHECK(parse_isa("scalar") == Isa::scalar);
  CHECK(parse_isa("auto") == detect_isa());
  CHECK_THROWS_AS(parse_isa("sse9"), std::invalid_argument);
}

TEST_CASE("count_covering reference semantics") {
  // 3 candidates x 1 word, column-major with stride 3.
  const std::vector<std::uint64_t> cols{0b111, 0b011, 0b101};
  const std::vector<MaskedWord> need{{0, 0b101}};
  const auto& k = table(Isa::scalar);
  CHECK(k.count_covering(cols.data(), 3, need, 0, 3) == 2);
  CHECK(k.count_covering(cols.data(), 3, need, 1, 3) == 1);
  CHECK(k.count_covering(cols.data(), 3, {}, 0, 3) == 3);
  CHECK(k.count_covering(cols.data(), 3, need, 2, 2) == 0);
}

TEST_CASE("SIMD kernels match scalar on random inputs") {
  if (!isa_supported(Isa::avx2)) {
    MESSAGE("AVX2 not available on this host; equivalence test skipped");
    return;
  }
  const auto& ref = table(Isa::scalar);
  const auto& simd = table(Isa::avx2);
  SplitMix64 rng(99);

  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t words = 1 + rng.next_below(20);
    const std::size_t stride = 1 + rng.next_below(100);
    const int density = static_cast<int>(rng.next_below(3));
    const auto cols = random_words(rng, words * stride, density);

    std::vector<MaskedWord> missing;
    for (std::size_t w = 0; w < words; ++w) {
      if (rng.next_below(2) == 0) {
        // sparse masks so that some candidates do cover them
        std::uint64_t m = rng.next() & rng.next() & rng.next() & rng.next();
        if (rng.next_below(4) == 0) m = 0;
        if (m != 0) missing.push_back({static_cast<std::uint32_t>(w), m});
      }
    }
    const std::size_t first = rng.next_below(stride + 1);
    const std::size_t last = first + rng.next_below(stride - first + 1);
    CHECK(simd.count_covering(cols.data(), stride, missing, first, last) ==
          ref.count_covering(cols.data(), stride, missing, first, last));

    const auto a = random_words(rng, words, density);
    const auto b = random_words(rng, words, density);
    CHECK(simd.popcount_and(a.data(), b.data(), words) == ref.popcount_and(a.data(), b.data(), words));
    CHECK(simd.popcount_andnot(a.data(), b.data(), words) ==
          ref.popcount_andnot(a.data(), b.data(), words));

    auto acc_ref = a;
    auto acc_simd = a;
    ref.or_accumulate(acc_ref.data(), b.data(), words);
    simd.or_accumulate(acc_simd.data(), b.data(), words);
    CHECK(acc_ref == acc_simd);
  }
}

TEST_CASE("engine results do not depend on the kernel variant") {
  if (!isa_supported(Isa::avx2)) return;
  IsaGuard guard;
  SplitMix64 rng(5);
  for (int trial = 0; trial < 12; ++trial) {
    const std::size_t n = 20 + rng.next_below(180);
    const Graph g = erdos_renyi(n, 0.3 + 0.6 * rng.next_unit(), rng.next());
    const std::size_t k = 1 + rng.next_below(3);

    set_active(Isa::scalar);
    const auto c_ref = count_dominating_exact(g, k);
    const auto gamma_ref = domination_number(g);
    set_active(Isa::avx2);
    const auto c_simd = count_dominating_exact(g, k);
    const auto gamma_simd = domination_number(g);

    CHECK(c_ref.dominating == c_simd.dominating);
    CHECK(gamma_ref == gamma_simd);
  }
}
