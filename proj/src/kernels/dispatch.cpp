#include "domset/kernels.hpp"

#include <atomic>
#include <stdexcept>
#include <string>

namespace domset::kernels {
namespace {

std::atomic<const KernelTable*>& active_slot() {
  static std::atomic<const KernelTable*> slot{&table(detect_isa())};
  return slot;
}

}  // namespace

bool isa_supported(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
#if defined(DOMSET_HAVE_AVX2)
      return __builtin_cpu_supports("avx2") != 0;
#else
      return false;
#endif
  }
  return false;
}

Isa detect_isa() { return isa_supported(Isa::avx2) ? Isa::avx2 : Isa::scalar; }

const KernelTable& table(Isa isa) {
#if defined(DOMSET_HAVE_AVX2)
  if (isa == Isa::avx2) return detail::avx2_table;
#endif
  if (isa == Isa::scalar) return detail::scalar_table;
  throw std::invalid_argument("kernel variant '" + std::string(isa_name(isa)) +
                              "' is not compiled into this build");
}

const KernelTable& active() { return *active_slot().load(std::memory_order_relaxed); }

void set_active(Isa isa) {
  if (!isa_supported(isa)) {
    throw std::invalid_argument("kernel variant '" + std::string(isa_name(isa)) +
                                "' is not supported on this CPU");
  }
  active_slot().store(&table(isa), std::memory_order_relaxed);
}

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
  }
  return "unknown";
}

Isa parse_isa(std::string_view name) {
  if (name == "scalar") return Isa::scalar;
  if (name == "avx2") return Isa::avx2;
  if (name == "auto") return detect_isa();
  throw std::invalid_argument("unknown kernel variant '" + std::string(name) + "'");
}

}  // namespace domset::kernels
