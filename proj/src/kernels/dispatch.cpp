#include "entangle/kernels.hpp"

#include <atomic>
#include <cstdio>
#include <cstdlib>

namespace entangle::kernels {
namespace {

bool cpu_has_avx2() noexcept {
#if defined(ENTANGLE_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const KernelTable* best_table() noexcept {
  if (const KernelTable* t = avx2_table()) return t;
  return &scalar_table();
}

const KernelTable* initial_table() noexcept {
  if (const char* env = std::getenv("ENTANGLE_KERNELS")) {
    const auto isa = parse_isa(env);
    if (!isa) std::fprintf(stderr, "warning: ignoring ENTANGLE_KERNELS=%s (expected scalar, avx2 or auto)\n", env);
    else if (*isa == Isa::Scalar) return &scalar_table();
    else if (!avx2_table()) std::fprintf(stderr, "warning: AVX2 kernels unavailable, using scalar\n");
  }
  return best_table();
}

std::atomic<const KernelTable*>& current() noexcept {
  static std::atomic<const KernelTable*> table{initial_table()};
  return table;
}

}  // namespace

const KernelTable& scalar_table() noexcept { return detail::kScalarTable; }

const KernelTable* avx2_table() noexcept {
#if defined(ENTANGLE_HAVE_AVX2)
  static const bool supported = cpu_has_avx2();
  return supported ? &detail::kAvx2Table : nullptr;
#else
  return nullptr;
#endif
}

bool isa_available(Isa isa) noexcept {
  return isa == Isa::Scalar || avx2_table() != nullptr;
}

std::optional<Isa> parse_isa(std::string_view name) noexcept {
  if (name == "scalar") return Isa::Scalar;
  if (name == "avx2") return Isa::Avx2;
  if (name == "auto") return best_table()->isa;
  return std::nullopt;
}

const KernelTable& active() noexcept { return *current().load(std::memory_order_acquire); }

bool select_isa(Isa isa) noexcept {
  if (!isa_available(isa)) return false;
  current().store(isa == Isa::Avx2 ? avx2_table() : &scalar_table(), std::memory_order_release);
  return true;
}

void select_best() noexcept { current().store(best_table(), std::memory_order_release); }

}  // namespace entangle::kernels
